#include "minkpair/spatial/criteria.hpp"

#include "minkpair/error.hpp"

namespace minkpair {

namespace {

std::vector<HomogeneousConstraint> joined(const std::vector<HomogeneousConstraint>& a,
                                          const std::vector<HomogeneousConstraint>& b) {
  auto out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_zero(const Point3& p) { return p == Point3{}; }

}  // namespace

std::vector<EdgeWithNormalCone> bounded_edges(const VPolytope3& p) {
  std::vector<HomogeneousConstraint> polar;
  for (const auto& g : p.cone().generators()) polar.push_back(constraint(g, Relation::Less));

  std::vector<EdgeWithNormalCone> out;
  const Polytope3& hull = p.bounded();
  for (const auto& [i, j] : hull.edges()) {
    auto rows = joined(hull.normal_cone_relint(Face3{{i, j}}), polar);
    if (cone_strictly_feasible(rows, 3)) {
      out.push_back({hull.vertices()[i], hull.vertices()[j], std::move(rows)});
    }
  }
  return out;
}

bool contains_translate(const std::vector<Point3>& face, const Point3& d) {
  if (is_zero(d)) return true;
  if (face.size() == 1) return false;
  if (face.size() == 2) {
    const Point3 e = face[1] - face[0];
    if (!is_zero(cross(e, d))) return false;
    return abs(dot(e, d)) <= dot(e, e);
  }
  // F meets F - d iff d lies in the difference body F - F, whose support in
  // an in-plane edge normal m is the width of F along m.
  const Point3 n = cross(face[1] - face[0], face[2] - face[0]);
  if (!dot(n, d).is_zero()) return false;
  for (std::size_t i = 0; i < face.size(); ++i) {
    for (std::size_t j = i + 1; j < face.size(); ++j) {
      const Point3 m = cross(face[j] - face[i], n);
      Rational lo = dot(m, face[0]), hi = lo;
      for (const auto& x : face) {
        lo = min(lo, dot(m, x));
        hi = max(hi, dot(m, x));
      }
      if (abs(dot(m, d)) > hi - lo) return false;
    }
  }
  return true;
}

bool summand_criterion3(const VPolytope3& p, const VPolytope3& k) {
  if (!(p.cone() == k.cone())) throw Error("incompatible recession cones");
  const Polytope3& hull = k.bounded();
  const auto faces = hull.faces();
  std::vector<std::vector<HomogeneousConstraint>> face_cones;
  face_cones.reserve(faces.size());
  for (const auto& f : faces) face_cones.push_back(hull.normal_cone_relint(f));

  for (const auto& e : bounded_edges(p)) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!cone_strictly_feasible(joined(e.normal_cone, face_cones[i]), 3)) continue;
      std::vector<Point3> pts;
      for (auto v : faces[i].vertices) pts.push_back(hull.vertices()[v]);
      if (!contains_translate(pts, e.vector())) return false;
    }
  }
  return true;
}

std::vector<std::pair<EdgeWithNormalCone, EdgeWithNormalCone>> equiparallel_edges(
    const VPolytope3& a, const VPolytope3& b) {
  if (!(a.cone() == b.cone())) throw Error("incompatible recession cones");
  std::vector<std::pair<EdgeWithNormalCone, EdgeWithNormalCone>> out;
  const auto eb = bounded_edges(b);
  for (const auto& x : bounded_edges(a)) {
    for (const auto& y : eb) {
      if (!is_zero(cross(x.vector(), y.vector()))) continue;
      if (cone_strictly_feasible(joined(x.normal_cone, y.normal_cone), 3)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace minkpair
