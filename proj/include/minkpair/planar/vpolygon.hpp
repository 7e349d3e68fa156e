#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "minkpair/cone.hpp"
#include "minkpair/planar/edge_measure.hpp"

namespace minkpair {

/// Support set of a V-polygon in one direction: a point or segment
/// (`points`, one or two entries) possibly extended by rays that start at
/// one of those points.
struct SupportFace {
  std::vector<Point2> points;
  std::vector<std::pair<Point2, Direction2>> rays;

  friend bool operator==(const SupportFace&, const SupportFace&) = default;
};

struct Support {
  /// nullopt encodes +infinity (direction outside the polar cone).
  std::optional<Rational> value;
  SupportFace face;

  bool finite() const { return value.has_value(); }
};

/// Closed convex set P + V in the plane with P a polygon (possibly a point
/// or segment) and V a pointed cone, kept in canonical form:
///   * the cone,
///   * the anchor: midpoint of the support set in the reference direction,
///   * the edge measure over admissible normals (interior of the polar).
/// Two VPolygons are equal as sets iff their canonical forms are equal.
class VPolygon {
 public:
  /// Validates and adopts a canonical triple. Throws Error if a normal is
  /// not admissible for the cone or, for a trivial cone, the edges do not close.
  VPolygon(Cone2 cone, Point2 anchor, EdgeMeasure measure);

  /// conv(points) + cone.
  static VPolygon from_points(std::span<const Point2> points, const Cone2& cone);
  /// {apex} + cone.
  static VPolygon cone_at(const Cone2& cone, const Point2& apex = {});

  const Cone2& cone() const { return cone_; }
  const Point2& anchor() const { return anchor_; }
  const EdgeMeasure& measure() const { return measure_; }

  /// Vertices of the bounded boundary part, counterclockwise. For a trivial
  /// cone this is the closed polygon (last vertex not repeated); otherwise
  /// the recession rays leave from the last vertex along the exit generator
  /// and arrive at the first along the entry generator.
  const std::vector<Point2>& chain() const { return chain_; }

  Support support(const Direction2& u) const;
  bool contains(const Point2& p) const;

  friend bool operator==(const VPolygon& a, const VPolygon& b) {
    return a.cone_ == b.cone_ && a.anchor_ == b.anchor_ && a.measure_ == b.measure_;
  }

 private:
  void build_chain();

  Cone2 cone_;
  Point2 anchor_;
  EdgeMeasure measure_;
  std::vector<Point2> chain_;
};

/// Coefficient-wise outer normal of a nonzero edge vector traversed
/// counterclockwise, and its coefficient.
std::pair<Direction2, Rational> edge_normal(const Point2& edge);

VPolygon translate(const VPolygon& a, const Point2& v);
/// Throws Error("incompatible recession cones") on cone mismatch.
VPolygon minkowski_sum(const VPolygon& a, const VPolygon& b);
/// t = 0 yields the bare cone at the origin. Throws Error for t < 0.
VPolygon scale(const VPolygon& a, const Rational& t);

/// A subset of C: chain vertices of A lie in C and recc A lies in recc C.
bool is_subset(const VPolygon& a, const VPolygon& c);

}  // namespace minkpair
