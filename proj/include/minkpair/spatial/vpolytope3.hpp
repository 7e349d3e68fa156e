#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minkpair/cone.hpp"
#include "minkpair/spatial/polytope3.hpp"

namespace minkpair {

/// P + V in space with P a polytope and V a pointed cone. The bounded part
/// keeps only vertices of P exposed by some direction in the interior of the
/// polar of V, which makes (cone, vertex set) a canonical form of the set.
class VPolytope3 {
 public:
  VPolytope3(std::span<const Point3> points, Cone3 cone);

  const Polytope3& bounded() const { return bounded_; }
  const Cone3& cone() const { return cone_; }
  const std::vector<Point3>& vertices() const { return bounded_.vertices(); }

  /// nullopt encodes +infinity (u outside the polar cone).
  std::optional<Rational> support(const Point3& u) const;
  bool contains(const Point3& p) const;

  friend bool operator==(const VPolytope3& a, const VPolytope3& b) {
    return a.cone_ == b.cone_ && a.vertices() == b.vertices();
  }

 private:
  Polytope3 bounded_;
  Cone3 cone_;
};

/// Throws Error("incompatible recession cones") on cone mismatch.
VPolytope3 minkowski_sum3(const VPolytope3& p, const VPolytope3& q);
VPolytope3 translate3(const VPolytope3& p, const Point3& v);

/// t with b = a + t, if any.
std::optional<Point3> translation_between(const VPolytope3& a, const VPolytope3& b);

/// A + D = B + C as canonical forms.
bool are_equivalent3(const VPolytope3& a, const VPolytope3& b, const VPolytope3& c,
                     const VPolytope3& d);

}  // namespace minkpair
