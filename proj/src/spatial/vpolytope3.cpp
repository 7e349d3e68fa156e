#include "minkpair/spatial/vpolytope3.hpp"

#include <algorithm>

#include "minkpair/error.hpp"

namespace minkpair {

namespace {

std::vector<HomogeneousConstraint> polar_interior(const Cone3& cone) {
  std::vector<HomogeneousConstraint> out;
  for (const auto& g : cone.generators()) out.push_back(constraint(g, Relation::Less));
  return out;
}

}  // namespace

VPolytope3::VPolytope3(std::span<const Point3> points, Cone3 cone) : cone_(std::move(cone)) {
  Polytope3 full = hull3(points);
  if (cone_.is_trivial()) {
    bounded_ = std::move(full);
    return;
  }
  // A vertex survives iff some u in the polar interior makes it the unique
  // maximizer, i.e. its normal cone meets int V°.
  const auto polar = polar_interior(cone_);
  std::vector<Point3> kept;
  for (std::size_t i = 0; i < full.vertices().size(); ++i) {
    auto rows = full.normal_cone_relint(Face3{{i}});
    rows.insert(rows.end(), polar.begin(), polar.end());
    if (cone_strictly_feasible(rows, 3)) kept.push_back(full.vertices()[i]);
  }
  bounded_ = hull3(kept);
}

std::optional<Rational> VPolytope3::support(const Point3& u) const {
  for (const auto& g : cone_.generators()) {
    if (dot(g, u).sign() > 0) return std::nullopt;
  }
  Rational best = dot(u, vertices().front());
  for (const auto& v : vertices()) best = max(best, dot(u, v));
  return best;
}

bool VPolytope3::contains(const Point3& p) const {
  // R = P + conv({0} and the generators) has P + V = R + V, and every facet
  // of P + V lies on a facet of R whose normal is in the polar cone.
  std::vector<Point3> pts = vertices();
  for (const auto& v : vertices()) {
    for (const auto& g : cone_.generators()) pts.push_back(v + g.vec());
  }
  const Polytope3 r = hull3(pts);
  if (r.dimension() == 3) {
    for (const auto& f : r.facets()) {
      if (!cone_.in_polar(f.normal)) continue;
      if (dot(f.normal, p) > dot(f.normal, r.vertices()[f.cycle.front()])) return false;
    }
    return true;
  }
  // Flat sets: p is outside iff some u strictly separates it from every
  // vertex while staying in the closed polar cone.
  std::vector<HomogeneousConstraint> rows;
  for (const auto& v : r.vertices()) rows.push_back(constraint(v - p, Relation::Less));
  for (const auto& g : cone_.generators()) rows.push_back(constraint(g, Relation::LessEqual));
  return !cone_strictly_feasible(rows, 3);
}

VPolytope3 minkowski_sum3(const VPolytope3& p, const VPolytope3& q) {
  if (!(p.cone() == q.cone())) throw Error("incompatible recession cones");
  std::vector<Point3> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return VPolytope3(sums, p.cone());
}

VPolytope3 translate3(const VPolytope3& p, const Point3& v) {
  std::vector<Point3> moved;
  for (const auto& a : p.vertices()) moved.push_back(a + v);
  return VPolytope3(moved, p.cone());
}

std::optional<Point3> translation_between(const VPolytope3& a, const VPolytope3& b) {
  if (!(a.cone() == b.cone()) || a.vertices().size() != b.vertices().size()) {
    return std::nullopt;
  }
  // Translation preserves lexicographic order, so sorted vertex lists align.
  const Point3 t = b.vertices().front() - a.vertices().front();
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    if (a.vertices()[i] + t != b.vertices()[i]) return std::nullopt;
  }
  return t;
}

bool are_equivalent3(const VPolytope3& a, const VPolytope3& b, const VPolytope3& c,
                     const VPolytope3& d) {
  return minkowski_sum3(a, d) == minkowski_sum3(b, c);
}

}  // namespace minkpair
