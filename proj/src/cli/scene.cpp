#include "minkpair/cli/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "minkpair/error.hpp"

namespace minkpair {

using nlohmann::json;

namespace {

Rational parse_rational(const json& j) {
  if (!j.is_string()) throw Error("rationals must be written as strings, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> parse_tuple(const json& j, std::size_t arity, const std::string& what) {
  if (!j.is_array() || j.size() != arity) {
    throw Error(what + " must be a list of " + std::to_string(arity) + " rationals");
  }
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x));
  return out;
}

std::vector<Rational> parse_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + " must be a list");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x));
  return out;
}

const json& field(const json& j, const char* key, const std::string& owner) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(owner + " is missing field \"" + key + "\"");
  }
  return j.at(key);
}

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

}  // namespace

const SceneSet& Scene::set(const std::string& name) const {
  for (const auto& s : sets) {
    if (s.name == name) return s;
  }
  throw Error("unknown set \"" + name + "\"");
}

const SceneFunction& Scene::function(const std::string& name) const {
  for (const auto& f : functions) {
    if (f.name == name) return f;
  }
  throw Error("unknown function \"" + name + "\"");
}

Scene parse_scene(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error("scene must be a JSON object");

  Scene scene;
  std::set<std::string> names;
  auto claim = [&](const std::string& name) {
    if (name.empty()) throw Error("scene entries need a nonempty name");
    if (!names.insert(name).second) throw Error("duplicate name \"" + name + "\"");
  };

  if (root.contains("sets")) {
    for (const auto& j : root.at("sets")) {
      SceneSet s;
      const json& name = field(j, "name", "set");
      if (!name.is_string()) throw Error("set name must be a string");
      s.name = name.get<std::string>();
      claim(s.name);
      const std::string owner = "set \"" + s.name + "\"";
      const json& dim = field(j, "dim", owner);
      if (!dim.is_number_integer() || (dim.get<int>() != 2 && dim.get<int>() != 3)) {
        throw Error(owner + ": dim must be 2 or 3");
      }
      s.dim = dim.get<int>();
      const auto arity = static_cast<std::size_t>(s.dim);
      const json& points = field(j, "points", owner);
      if (!points.is_array() || points.empty()) throw Error(owner + ": points must be nonempty");
      for (const auto& p : points) s.points.push_back(parse_tuple(p, arity, owner + " point"));
      if (j.contains("cone")) {
        if (!j.at("cone").is_array()) throw Error(owner + ": cone must be a list");
        for (const auto& g : j.at("cone")) s.cone.push_back(parse_tuple(g, arity, owner + " generator"));
      }
      scene.sets.push_back(std::move(s));
    }
  }
  if (root.contains("functions")) {
    for (const auto& j : root.at("functions")) {
      SceneFunction f;
      const json& name = field(j, "name", "function");
      if (!name.is_string()) throw Error("function name must be a string");
      f.name = name.get<std::string>();
      claim(f.name);
      const std::string owner = "function \"" + f.name + "\"";
      const auto domain = parse_tuple(field(j, "domain", owner), 2, owner + " domain");
      f.lower = domain[0];
      f.upper = domain[1];
      f.breakpoints = parse_list(field(j, "breakpoints", owner), owner + " breakpoints");
      f.values = parse_list(field(j, "values", owner), owner + " values");
      if (f.breakpoints.empty() || f.breakpoints.front() != f.lower ||
          f.breakpoints.back() != f.upper) {
        throw Error(owner + ": breakpoints must start and end at the domain endpoints");
      }
      scene.functions.push_back(std::move(f));
    }
  }
  return scene;
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scene file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scene(text.str());
}

json to_json(const SceneSet& set) {
  json points = json::array();
  for (const auto& p : set.points) points.push_back(rationals(p));
  json cone = json::array();
  for (const auto& g : set.cone) cone.push_back(rationals(g));
  return {{"name", set.name}, {"dim", set.dim}, {"points", points}, {"cone", cone}};
}

json to_json(const SceneFunction& fn) {
  return {{"name", fn.name},
          {"domain", rationals({fn.lower, fn.upper})},
          {"breakpoints", rationals(fn.breakpoints)},
          {"values", rationals(fn.values)}};
}

json to_json(const Point2& p) { return rationals({p.x, p.y}); }
json to_json(const Point3& p) { return rationals({p.x, p.y, p.z}); }

json scene_to_json(const Scene& scene) {
  json sets = json::array();
  for (const auto& s : scene.sets) sets.push_back(to_json(s));
  json functions = json::array();
  for (const auto& f : scene.functions) functions.push_back(to_json(f));
  return {{"sets", sets}, {"functions", functions}};
}

Cone2 to_cone2(const SceneSet& set) {
  if (set.dim != 2) throw Error("set \"" + set.name + "\" is not planar");
  std::vector<Direction2> gens;
  for (const auto& g : set.cone) gens.push_back(normalize_direction(Point2{g[0], g[1]}));
  return Cone2::from_generators(gens);
}

Cone3 to_cone3(const SceneSet& set) {
  if (set.dim != 3) throw Error("set \"" + set.name + "\" is not spatial");
  std::vector<Direction3> gens;
  for (const auto& g : set.cone) gens.push_back(normalize_direction(Point3{g[0], g[1], g[2]}));
  return Cone3(gens);
}

VPolygon to_polygon(const SceneSet& set) {
  const Cone2 cone = to_cone2(set);
  std::vector<Point2> pts;
  for (const auto& p : set.points) pts.push_back({p[0], p[1]});
  return VPolygon::from_points(pts, cone);
}

VPolytope3 to_polytope(const SceneSet& set) {
  Cone3 cone = to_cone3(set);
  std::vector<Point3> pts;
  for (const auto& p : set.points) pts.push_back({p[0], p[1], p[2]});
  return VPolytope3(pts, std::move(cone));
}

PLConvexFn to_function(const SceneFunction& fn) { return PLConvexFn(fn.breakpoints, fn.values); }

SceneSet from_polygon(const std::string& name, const VPolygon& a) {
  SceneSet s{name, 2, {}, {}};
  for (const auto& p : a.chain()) s.points.push_back({p.x, p.y});
  for (const auto& g : a.cone().generators()) s.cone.push_back({Rational(g.x()), Rational(g.y())});
  return s;
}

SceneSet from_polytope(const std::string& name, const VPolytope3& p) {
  SceneSet s{name, 3, {}, {}};
  for (const auto& v : p.vertices()) s.points.push_back({v.x, v.y, v.z});
  for (const auto& g : p.cone().generators()) {
    s.cone.push_back({Rational(g.x()), Rational(g.y()), Rational(g.z())});
  }
  return s;
}

SceneFunction from_function(const std::string& name, const PLConvexFn& f) {
  return {name, f.lower(), f.upper(), f.breakpoints(), f.values()};
}

}  // namespace minkpair
