#include "minkpair/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "minkpair/cli/scene.hpp"
#include "minkpair/cli/svg.hpp"
#include "minkpair/dc/hartman.hpp"
#include "minkpair/error.hpp"
#include "minkpair/planar/pairs.hpp"
#include "minkpair/spatial/criteria.hpp"

namespace minkpair {

using nlohmann::json;

namespace {

struct Options {
  std::string scene;
  std::string pair;
  std::string pairs;
  std::string sets;
  std::string out;
  std::string viewport;
  std::string project;
};

struct Verdict {
  json result;
  std::string summary;
  json certificate;
  std::string svg = {};  // render only
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> names(const std::string& text, std::size_t count, const char* flag) {
  auto out = split(text);
  if (out.size() != count) {
    throw Error(std::string(flag) + " expects " + std::to_string(count) + " comma-separated names");
  }
  return out;
}

std::vector<Rational> rationals(const std::string& text, std::size_t count, const char* flag) {
  const auto parts = split(text);
  if (parts.size() != count) {
    throw Error(std::string(flag) + " expects " + std::to_string(count) + " comma-separated values");
  }
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(Rational::parse(p));
  return out;
}

std::string plural(std::size_t n, const std::string& word, const std::string& many = "") {
  if (n == 1) return "1 " + word;
  return std::to_string(n) + " " + (many.empty() ? word + "s" : many);
}

const char* boolean(bool b) { return b ? "true" : "false"; }

int common_dim(const std::vector<const SceneSet*>& sets) {
  for (const auto* s : sets) {
    if (s->dim != sets.front()->dim) throw Error("sets mix dimensions 2 and 3");
  }
  return sets.front()->dim;
}

void require_planar(const SceneSet& s, const char* command) {
  if (s.dim != 2) {
    throw Error(std::string(command) + " is available for planar sets only");
  }
}

json edge_json(const Point3& a, const Point3& b) { return json::array({to_json(a), to_json(b)}); }

json face_json(const SupportFace& f) {
  json pts = json::array();
  for (const auto& p : f.points) pts.push_back(to_json(p));
  return pts;
}

Verdict cmd_sum(const Scene& scene, const Options& o) {
  const auto list = split(o.sets);
  if (list.size() < 2) throw Error("--sets expects at least two names");
  std::vector<const SceneSet*> sets;
  for (const auto& n : list) sets.push_back(&scene.set(n));
  std::string name = list.front();
  for (std::size_t i = 1; i < list.size(); ++i) name += "+" + list[i];
  SceneSet result;
  if (common_dim(sets) == 2) {
    VPolygon sum = to_polygon(*sets.front());
    for (std::size_t i = 1; i < sets.size(); ++i) sum = minkowski_sum(sum, to_polygon(*sets[i]));
    result = from_polygon(name, sum);
  } else {
    VPolytope3 sum = to_polytope(*sets.front());
    for (std::size_t i = 1; i < sets.size(); ++i) sum = minkowski_sum3(sum, to_polytope(*sets[i]));
    result = from_polytope(name, sum);
  }
  return {to_json(result), "sum: " + name + " has " + plural(result.points.size(), "vertex", "vertices"),
          json()};
}

Verdict cmd_reduce(const Scene& scene, const Options& o) {
  const auto n = names(o.pair, 2, "--pair");
  const SceneSet& a = scene.set(n[0]);
  const SceneSet& b = scene.set(n[1]);
  require_planar(a, "reduce");
  require_planar(b, "reduce");
  const PolygonPair r = reduce_pair(to_polygon(a), to_polygon(b));
  const SceneSet ra = from_polygon(n[0] + "'", r.first);
  const SceneSet rb = from_polygon(n[1] + "'", r.second);
  return {json::array({to_json(ra), to_json(rb)}),
          "reduced: " + ra.name + " (" + plural(ra.points.size(), "vertex", "vertices") + "), " + rb.name +
              " (" + plural(rb.points.size(), "vertex", "vertices") + ")",
          json{{"zero_minimal", is_zero_minimal(r.first, r.second)}}};
}

json normals_json(const std::vector<Direction2>& normals) {
  json out = json::array();
  for (const auto& u : normals) out.push_back(json::array({u.x().get_str(), u.y().get_str()}));
  return out;
}

Verdict cmd_minimal(const Scene& scene, const Options& o) {
  const auto n = names(o.pair, 2, "--pair");
  const SceneSet& sa = scene.set(n[0]);
  const SceneSet& sb = scene.set(n[1]);
  require_planar(sa, "minimal");
  require_planar(sb, "minimal");
  const VPolygon a = to_polygon(sa);
  const VPolygon b = to_polygon(sb);
  const auto shared = common_normals(a, b);
  if (a.cone().is_trivial() && b.cone().is_trivial()) {
    const bool ok = is_minimal_bounded(a, b);
    return {ok, std::string("minimal: ") + boolean(ok) + " (" + plural(shared.size(), "shared normal") + ")",
            json{{"shared_normals", normals_json(shared)}}};
  }
  const bool ok = is_zero_minimal(a, b);
  const bool origin = on_chain(b.chain(), Point2{});
  return {ok,
          std::string("0-minimal: ") + boolean(ok) + " (" + plural(shared.size(), "shared normal") +
              ", origin " + (origin ? "on" : "off") + " the exposed boundary of " + n[1] + ")",
          json{{"shared_normals", normals_json(shared)}, {"origin_on_boundary", origin}}};
}

Verdict cmd_summand(const Scene& scene, const Options& o) {
  const auto n = names(o.pair, 2, "--pair");
  const SceneSet& sp = scene.set(n[0]);
  const SceneSet& sk = scene.set(n[1]);
  if (common_dim({&sp, &sk}) == 2) {
    const SummandResult r = is_summand(to_polygon(sp), to_polygon(sk));
    json cert;
    if (r.complement) cert = {{"complement", to_json(from_polygon(n[1] + "-" + n[0], *r.complement))}};
    return {r.is_summand, std::string("summand: ") + boolean(r.is_summand), cert};
  }
  const bool ok = summand_criterion3(to_polytope(sp), to_polytope(sk));
  return {ok, std::string("summand: ") + boolean(ok), json()};
}

Verdict cmd_reduced(const Scene& scene, const Options& o) {
  const auto n = names(o.pair, 2, "--pair");
  const SceneSet& sa = scene.set(n[0]);
  const SceneSet& sb = scene.set(n[1]);
  json pairs = json::array();
  if (common_dim({&sa, &sb}) == 2) {
    const VPolygon a = to_polygon(sa);
    const VPolygon b = to_polygon(sb);
    if (!(a.cone() == b.cone())) throw Error("incompatible recession cones");
    for (const auto& u : common_normals(a, b)) {
      pairs.push_back({{"normal", normals_json({u})[0]},
                       {"edges", json::array({face_json(a.support(u).face),
                                              face_json(b.support(u).face)})}});
    }
  } else {
    for (const auto& [x, y] : equiparallel_edges(to_polytope(sa), to_polytope(sb))) {
      pairs.push_back({{"edges", json::array({edge_json(x.from, x.to), edge_json(y.from, y.to)})}});
    }
  }
  const bool ok = pairs.empty();
  return {ok,
          std::string("reduced: ") + boolean(ok) + " (" + plural(pairs.size(), "equiparallel edge pair") + ")",
          json{{"equiparallel_edges", pairs}}};
}

Verdict cmd_kernel(const Scene& scene, const Options& o) {
  const auto n = names(o.pair, 2, "--pair");
  const SceneSet& sa = scene.set(n[0]);
  const SceneSet& sb = scene.set(n[1]);
  require_planar(sa, "kernel");
  require_planar(sb, "kernel");
  const auto chain = kernel_of_minimality(to_polygon(sa), to_polygon(sb));
  json pts = json::array();
  for (const auto& p : chain) pts.push_back(to_json(p));
  return {pts, "kernel: chain of " + plural(chain.size(), "point"), json{{"chain", pts}}};
}

Verdict cmd_equiv(const Scene& scene, const Options& o) {
  const auto n = names(o.pairs, 4, "--pairs");
  std::vector<const SceneSet*> s;
  for (const auto& x : n) s.push_back(&scene.set(x));
  SceneSet left, right;
  bool ok = false;
  const std::string ln = n[0] + "+" + n[3];
  const std::string rn = n[1] + "+" + n[2];
  if (common_dim(s) == 2) {
    const VPolygon l = minkowski_sum(to_polygon(*s[0]), to_polygon(*s[3]));
    const VPolygon r = minkowski_sum(to_polygon(*s[1]), to_polygon(*s[2]));
    ok = l == r;
    left = from_polygon(ln, l);
    right = from_polygon(rn, r);
  } else {
    const VPolytope3 l = minkowski_sum3(to_polytope(*s[0]), to_polytope(*s[3]));
    const VPolytope3 r = minkowski_sum3(to_polytope(*s[1]), to_polytope(*s[2]));
    ok = l == r;
    left = from_polytope(ln, l);
    right = from_polytope(rn, r);
  }
  return {ok, std::string("equivalent: ") + boolean(ok),
          json{{"sums", json::array({to_json(left), to_json(right)})}}};
}

Verdict cmd_dcmin(const Scene& scene, const Options& o) {
  const auto n = names(o.pair, 2, "--pair");
  const DcPair p(to_function(scene.function(n[0])), to_function(scene.function(n[1])));
  const DcPair r = hartman_minimize(p);
  const PolygonPair sets = hartman_sets(p);
  const SceneFunction g = from_function(n[0] + "'", r.g);
  const SceneFunction h = from_function(n[1] + "'", r.h);
  return {json::array({to_json(g), to_json(h)}),
          "hartman-minimal: " + g.name + " (" + plural(g.breakpoints.size(), "breakpoint") + "), " +
              h.name + " (" + plural(h.breakpoints.size(), "breakpoint") + ")",
          json{{"H_minimal", is_H_minimal(sets.first, sets.second)},
               {"sets", json::array({to_json(from_polygon("A", sets.first)),
                                     to_json(from_polygon("B", sets.second))})}}};
}

Verdict cmd_render(const Scene& scene, const Options& o) {
  std::vector<SceneSet> sets;
  for (const auto& n : split(o.sets)) {
    if (!n.empty()) sets.push_back(scene.set(n));
  }
  RenderOptions opts;
  if (!o.viewport.empty()) {
    const auto v = rationals(o.viewport, 4, "--viewport");
    opts.viewport = Viewport{v[0].to_double(), v[1].to_double(), v[2].to_double(), v[3].to_double()};
  }
  if (!o.project.empty()) {
    const auto d = rationals(o.project, 3, "--project");
    opts.projection = Point3{d[0], d[1], d[2]};
  }
  Verdict v;
  v.svg = render_svg(sets, opts);
  v.result = true;
  v.summary = "rendered " + plural(sets.size(), "set");
  return v;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with pairs of convex polyhedral sets", "minkpair"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<Verdict(const Scene&, const Options&)>;
  struct Command {
    const char* name;
    const char* help;
    const char* selector;  // which name option the command needs
    Handler handler;
  };
  const std::vector<Command> commands = {
      {"sum", "Minkowski sum of sets", "--sets", cmd_sum},
      {"reduce", "equivalent 0-minimal pair (planar)", "--pair", cmd_reduce},
      {"minimal", "minimality test of a pair (planar)", "--pair", cmd_minimal},
      {"summand", "is the first set a summand of the second", "--pair", cmd_summand},
      {"reduced", "equiparallel edges; none means the pair is reduced", "--pair", cmd_reduced},
      {"kernel", "kernel of minimality of a 0-minimal pair (planar)", "--pair", cmd_kernel},
      {"equiv", "equivalence (A,B) ~ (C,D), i.e. A+D = B+C", "--pairs", cmd_equiv},
      {"dcmin", "Hartman-minimal representation of a dc pair of functions", "--pair", cmd_dcmin},
      {"render", "SVG drawing of sets", "--sets", cmd_render},
  };
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("--scene", o.scene, "scene JSON file")->required();
    const std::string sel = command.selector;
    if (sel == "--pair") sub->add_option("--pair", o.pair, "two names: A,B")->required();
    if (sel == "--pairs") sub->add_option("--pairs", o.pairs, "four names: A,B,C,D")->required();
    if (sel == "--sets") sub->add_option("--sets", o.sets, "comma-separated names")->required();
    sub->add_option("--out", o.out, "write the verdict (JSON, or SVG for render) to a path, or - for stdout");
    if (std::string(command.name) == "render") {
      sub->add_option("--viewport", o.viewport, "xmin,ymin,xmax,ymax");
      sub->add_option("--project", o.project, "viewing direction dx,dy,dz for 3D sets");
    }
    by_app[sub] = &command;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  const Command* command = by_app.at(app.get_subcommands().front());
  try {
    const Scene scene = load_scene(o.scene);
    Verdict v = command->handler(scene, o);
    if (std::string(command->name) == "render") {
      if (o.out.empty() || o.out == "-") {
        out << v.svg;
      } else {
        write_file(o.out, v.svg);
        out << v.summary << " to " << o.out << '\n';
      }
      return kExitVerdict;
    }
    json args_json = json::object();
    for (const auto& [key, value] : std::map<std::string, std::string>{
             {"scene", o.scene}, {"pair", o.pair}, {"pairs", o.pairs}, {"sets", o.sets}}) {
      if (!value.empty()) args_json[key] = value;
    }
    const json verdict = {{"command", command->name},
                          {"args", args_json},
                          {"result", v.result},
                          {"summary", v.summary},
                          {"certificate", v.certificate}};
    if (o.out == "-") {
      out << verdict.dump(2) << '\n';
    } else {
      if (!o.out.empty()) write_file(o.out, verdict.dump(2) + "\n");
      out << v.summary << '\n';
    }
    return kExitVerdict;
  } catch (const Error& e) {
    err << "minkpair: error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace minkpair
