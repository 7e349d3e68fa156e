#include "minkpair/spatial/polytope3.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "minkpair/error.hpp"
#include "minkpair/hull2.hpp"

namespace minkpair {

namespace {

int dominant_axis(const Point3& n) {
  const Rational ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  if (ax >= ay && ax >= az) return 0;
  return ay >= az ? 1 : 2;
}

// Drops coordinate k, keeping the remaining two in cyclic order so that a
// counterclockwise turn about +e_k stays counterclockwise.
Point2 project(const Point3& p, int k) {
  switch (k) {
    case 0:
      return {p.y, p.z};
    case 1:
      return {p.z, p.x};
    default:
      return {p.x, p.y};
  }
}

Rational component(const Point3& p, int k) { return k == 0 ? p.x : (k == 1 ? p.y : p.z); }

// Extreme points of coplanar points, counterclockwise about normal n.
std::vector<Point3> planar_hull(const std::vector<Point3>& pts, const Point3& n) {
  const int k = dominant_axis(n);
  std::map<Point2, Point3> lift;
  std::vector<Point2> flat;
  flat.reserve(pts.size());
  for (const auto& p : pts) {
    const Point2 q = project(p, k);
    lift.emplace(q, p);
    flat.push_back(q);
  }
  const auto hull = convex_hull_2d(flat);
  std::vector<Point3> out;
  out.reserve(hull.size());
  for (const auto& q : hull) out.push_back(lift.at(q));
  if (component(n, k).sign() < 0) std::reverse(out.begin(), out.end());
  return out;
}

struct Triangle {
  std::array<std::size_t, 3> v;
  Point3 normal;
  Rational offset;
  bool alive = true;
};

Triangle make_triangle(const std::vector<Point3>& p, std::size_t a, std::size_t b, std::size_t c) {
  Triangle t{{a, b, c}, cross(p[b] - p[a], p[c] - p[a]), {}, true};
  t.offset = dot(t.normal, p[a]);
  return t;
}

std::size_t index_of(const std::vector<Point3>& sorted, const Point3& p) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), p) -
                                  sorted.begin());
}

}  // namespace

Polytope3 hull3(std::span<const Point3> points) {
  if (points.empty()) throw Error("convex hull of an empty point set");
  std::vector<Point3> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());

  Polytope3 out;
  if (p.size() == 1) {
    out.vertices_ = p;
    out.finish_edges();
    return out;
  }

  const Point3 d = p[1] - p[0];
  std::size_t i2 = 0;
  Point3 plane_normal;
  for (std::size_t i = 2; i < p.size(); ++i) {
    plane_normal = cross(d, p[i] - p[0]);
    if (plane_normal != Point3{}) {
      i2 = i;
      break;
    }
  }
  if (i2 == 0) {
    // Collinear: the extremes along d.
    const auto [lo, hi] = std::minmax_element(p.begin(), p.end(), [&](const Point3& a, const Point3& b) {
      return dot(d, a) < dot(d, b);
    });
    out.dimension_ = 1;
    out.vertices_ = {*lo, *hi};
    std::sort(out.vertices_.begin(), out.vertices_.end());
    out.finish_edges();
    return out;
  }

  std::size_t i3 = 0;
  for (std::size_t i = 2; i < p.size(); ++i) {
    if (dot(plane_normal, p[i] - p[0]).sign() != 0) {
      i3 = i;
      break;
    }
  }
  if (i3 == 0) {
    const auto cycle = planar_hull(p, plane_normal);
    out.dimension_ = 2;
    out.vertices_ = cycle;
    std::sort(out.vertices_.begin(), out.vertices_.end());
    for (const auto& q : cycle) out.flat_cycle_.push_back(index_of(out.vertices_, q));
    out.finish_edges();
    return out;
  }

  // Beneath-beyond: start from a tetrahedron, add points one at a time,
  // replacing the strictly visible triangles by a cone to the horizon.
  std::vector<Triangle> tris;
  const std::array<std::size_t, 4> tet{0, 1, i2, i3};
  for (int skip = 0; skip < 4; ++skip) {
    std::array<std::size_t, 3> f{};
    int m = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != skip) f[m++] = tet[j];
    }
    Triangle t = make_triangle(p, f[0], f[1], f[2]);
    if (dot(t.normal, p[tet[skip]]) > t.offset) t = make_triangle(p, f[0], f[2], f[1]);
    tris.push_back(std::move(t));
  }

  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::find(tet.begin(), tet.end(), i) != tet.end()) continue;
    std::set<std::pair<std::size_t, std::size_t>> visible_edges;
    bool any = false;
    for (auto& t : tris) {
      if (!t.alive || dot(t.normal, p[i]) <= t.offset) continue;
      t.alive = false;
      any = true;
      for (int j = 0; j < 3; ++j) visible_edges.emplace(t.v[j], t.v[(j + 1) % 3]);
    }
    if (!any) continue;
    for (const auto& [a, b] : visible_edges) {
      if (!visible_edges.count({b, a})) tris.push_back(make_triangle(p, a, b, i));
    }
    std::erase_if(tris, [](const Triangle& t) { return !t.alive; });
  }

  // Merge coplanar triangles into facets and drop points that are not
  // extreme within their facet.
  std::map<Direction3, std::vector<Point3>> groups;
  for (const auto& t : tris) {
    auto& g = groups[normalize_direction(t.normal)];
    for (auto v : t.v) g.push_back(p[v]);
  }
  std::vector<std::pair<Direction3, std::vector<Point3>>> cycles;
  std::vector<Point3> verts;
  for (auto& [n, pts] : groups) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cycle = planar_hull(pts, n.vec());
    verts.insert(verts.end(), cycle.begin(), cycle.end());
    cycles.emplace_back(n, std::move(cycle));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  out.dimension_ = 3;
  out.vertices_ = std::move(verts);
  for (const auto& [n, cycle] : cycles) {
    Facet3 f{n, {}};
    for (const auto& q : cycle) f.cycle.push_back(index_of(out.vertices_, q));
    out.facets_.push_back(std::move(f));
  }
  out.finish_edges();
  return out;
}

void Polytope3::finish_edges() {
  std::set<std::pair<std::size_t, std::size_t>> e;
  auto add_cycle = [&](const std::vector<std::size_t>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto a = c[i], b = c[(i + 1) % c.size()];
      e.emplace(std::min(a, b), std::max(a, b));
    }
  };
  if (dimension_ == 1) e.emplace(0, 1);
  if (dimension_ == 2) add_cycle(flat_cycle_);
  for (const auto& f : facets_) add_cycle(f.cycle);
  edges_.assign(e.begin(), e.end());
  neighbors_.assign(vertices_.size(), {});
  for (const auto& [a, b] : edges_) {
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
}

std::vector<Face3> Polytope3::faces() const {
  std::vector<Face3> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back({{i}});
  for (const auto& [a, b] : edges_) out.push_back({{a, b}});
  if (dimension_ == 3) {
    for (const auto& f : facets_) {
      Face3 face{f.cycle};
      std::sort(face.vertices.begin(), face.vertices.end());
      out.push_back(std::move(face));
    }
  } else if (dimension_ == 2) {
    Face3 whole;
    for (std::size_t i = 0; i < vertices_.size(); ++i) whole.vertices.push_back(i);
    out.push_back(std::move(whole));
  }
  return out;
}

std::vector<HomogeneousConstraint> Polytope3::normal_cone_relint(const Face3& face) const {
  std::vector<HomogeneousConstraint> out;
  const Point3& f = vertices_[face.vertices.front()];
  for (std::size_t k = 1; k < face.vertices.size(); ++k) {
    out.push_back(constraint(vertices_[face.vertices[k]] - f, Relation::Equal));
  }
  std::set<std::size_t> outside;
  for (auto i : face.vertices) {
    for (auto w : neighbors_[i]) {
      if (!std::binary_search(face.vertices.begin(), face.vertices.end(), w)) outside.insert(w);
    }
  }
  for (auto w : outside) out.push_back(constraint(vertices_[w] - f, Relation::Less));
  return out;
}

}  // namespace minkpair
