#include "minkpair/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "minkpair/error.hpp"

namespace minkpair {

namespace {

using Vec = std::array<double, 2>;

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#8c564b"};

struct Shape {
  std::string name;
  std::string color;
  std::vector<std::vector<Vec>> polygons;   // filled and stroked
  std::vector<std::vector<Vec>> polylines;  // stroked only
  std::vector<std::pair<Vec, Vec>> rays;    // start, direction
  std::vector<Vec> dots;
  std::vector<std::pair<Vec, std::string>> labels;
};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Vec to_vec(const Point2& p) { return {p.x.to_double(), p.y.to_double()}; }

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

// Orthonormal-ish screen basis for viewing along d.
struct Projection {
  Point3 d, p, q;
  double np = 1, nq = 1;

  explicit Projection(const Point3& dir) : d(dir) {
    if (d.x.is_zero() && d.y.is_zero()) {
      p = {Rational(1), Rational(0), Rational(0)};
      q = {Rational(0), Rational(1), Rational(0)};
    } else {
      p = {-d.y, d.x, Rational(0)};
      q = cross(d, p);
    }
    np = std::sqrt(dot(p, p).to_double());
    nq = std::sqrt(dot(q, q).to_double());
  }
  Vec operator()(const Point3& v) const {
    return {dot(v, p).to_double() / np, dot(v, q).to_double() / nq};
  }
};

Shape planar_shape(const SceneSet& set) {
  const VPolygon a = to_polygon(set);
  Shape s;
  s.name = escape(set.name);
  std::vector<Vec> chain;
  for (const auto& p : a.chain()) chain.push_back(to_vec(p));
  if (a.cone().is_trivial()) {
    if (chain.size() == 1) s.dots.push_back(chain.front());
    else if (chain.size() == 2) s.polylines.push_back(chain);
    else s.polygons.push_back(chain);
    return s;
  }
  const Vec in = to_vec(a.cone().entry_generator().vec());
  const Vec out = to_vec(a.cone().exit_generator().vec());
  s.rays.push_back({chain.front(), in});
  s.rays.push_back({chain.back(), out});
  if (chain.size() == 1) s.dots.push_back(chain.front());
  else s.polylines.push_back(chain);
  return s;
}

Shape spatial_shape(const SceneSet& set, const Projection& proj) {
  const VPolytope3 p = to_polytope(set);
  const Polytope3& hull = p.bounded();
  Shape s;
  s.name = escape(set.name);
  std::vector<Vec> pv;
  for (const auto& v : hull.vertices()) pv.push_back(proj(v));
  if (hull.dimension() == 3) {
    for (const auto& f : hull.facets()) {
      if (dot(f.normal, proj.d).sign() >= 0) continue;
      std::vector<Vec> poly;
      for (auto i : f.cycle) poly.push_back(pv[i]);
      s.polygons.push_back(std::move(poly));
    }
  } else if (hull.dimension() == 0) {
    s.dots.push_back(pv.front());
  } else {
    for (const auto& [i, j] : hull.edges()) s.polylines.push_back({pv[i], pv[j]});
  }
  for (const auto& g : p.cone().generators()) {
    const Vec dir = proj(g.vec());
    if (std::abs(dir[0]) + std::abs(dir[1]) < 1e-12) continue;
    for (const auto& v : pv) s.rays.push_back({v, dir});
  }
  for (std::size_t i = 0; i < hull.vertices().size(); ++i) {
    s.labels.push_back({pv[i], (-dot(hull.vertices()[i], proj.d)).str()});
  }
  return s;
}

Viewport fit(const std::vector<Shape>& shapes) {
  std::vector<Vec> pts{{0.0, 0.0}};
  bool unbounded = false;
  for (const auto& s : shapes) {
    for (const auto& poly : s.polygons) pts.insert(pts.end(), poly.begin(), poly.end());
    for (const auto& line : s.polylines) pts.insert(pts.end(), line.begin(), line.end());
    pts.insert(pts.end(), s.dots.begin(), s.dots.end());
    for (const auto& r : s.rays) pts.push_back(r.first);
    unbounded = unbounded || !s.rays.empty();
  }
  Viewport v{pts[0][0], pts[0][1], pts[0][0], pts[0][1]};
  for (const auto& p : pts) {
    v.xmin = std::min(v.xmin, p[0]);
    v.xmax = std::max(v.xmax, p[0]);
    v.ymin = std::min(v.ymin, p[1]);
    v.ymax = std::max(v.ymax, p[1]);
  }
  const double pad = 1.0 + 0.1 * std::max(v.xmax - v.xmin, v.ymax - v.ymin) + (unbounded ? 2.0 : 0.0);
  v.xmin -= pad;
  v.ymin -= pad;
  v.xmax += pad;
  v.ymax += pad;
  return v;
}

}  // namespace

std::string render_svg(const std::vector<SceneSet>& sets, const RenderOptions& options) {
  if (sets.empty()) throw Error("nothing to render: empty selection");
  std::optional<Projection> proj;
  if (options.projection) {
    if (*options.projection == Point3{}) throw Error("projection direction must be nonzero");
    proj.emplace(*options.projection);
  }

  std::vector<Shape> shapes;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].dim == 3 && !proj) {
      throw Error("set \"" + sets[i].name + "\" is 3D; pass --project dx,dy,dz");
    }
    Shape s = sets[i].dim == 3 ? spatial_shape(sets[i], *proj) : planar_shape(sets[i]);
    s.color = kPalette[i % kPalette.size()];
    shapes.push_back(std::move(s));
  }

  const Viewport v = options.viewport.value_or(fit(shapes));
  if (!(v.xmax > v.xmin) || !(v.ymax > v.ymin)) throw Error("viewport is empty");
  const double width = 480.0;
  const double scale = width / (v.xmax - v.xmin);
  const double height = scale * (v.ymax - v.ymin);
  auto X = [&](double x) { return num((x - v.xmin) * scale); };
  auto Y = [&](double y) { return num((v.ymax - y) * scale); };
  auto points_attr = [&](const std::vector<Vec>& pts) {
    std::string out;
    for (const auto& p : pts) {
      if (!out.empty()) out += ' ';
      out += X(p[0]) + "," + Y(p[1]);
    }
    return out;
  };
  const double reach = 4.0 * ((v.xmax - v.xmin) + (v.ymax - v.ymin));

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
     << num(height) << "\">\n"
     << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\"/></clipPath></defs>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" fill=\"white\"/>\n"
     << "<g clip-path=\"url(#view)\" stroke-linejoin=\"round\">\n";

  for (const auto& s : shapes) {
    os << "<g id=\"set-" << s.name << "\" stroke=\"" << s.color << "\" fill=\"" << s.color
       << "\">\n";
    for (const auto& poly : s.polygons) {
      os << "<polygon points=\"" << points_attr(poly)
         << "\" fill-opacity=\"0.15\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& line : s.polylines) {
      os << "<polyline points=\"" << points_attr(line) << "\" fill=\"none\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& [start, dir] : s.rays) {
      const double len = std::hypot(dir[0], dir[1]);
      const Vec end{start[0] + reach * dir[0] / len, start[1] + reach * dir[1] / len};
      os << "<line x1=\"" << X(start[0]) << "\" y1=\"" << Y(start[1]) << "\" x2=\"" << X(end[0])
         << "\" y2=\"" << Y(end[1]) << "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    }
    for (const auto& d : s.dots) {
      os << "<circle cx=\"" << X(d[0]) << "\" cy=\"" << Y(d[1]) << "\" r=\"3\"/>\n";
    }
    for (const auto& [at, text] : s.labels) {
      os << "<text x=\"" << X(at[0]) << "\" y=\"" << Y(at[1])
         << "\" font-size=\"10\" stroke=\"none\" dx=\"3\" dy=\"-3\">" << text << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << X(-0.15) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0.15) << "\" y2=\""
     << Y(0) << "\"/>\n"
     << "<line x1=\"" << X(0) << "\" y1=\"" << Y(-0.15) << "\" x2=\"" << X(0) << "\" y2=\""
     << Y(0.15) << "\"/>\n"
     << "</g>\n</g>\n";
  double legend_y = 14;
  for (const auto& s : shapes) {
    os << "<text x=\"6\" y=\"" << num(legend_y) << "\" font-size=\"12\" fill=\"" << s.color
       << "\">" << s.name << "</text>\n";
    legend_y += 14;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace minkpair
