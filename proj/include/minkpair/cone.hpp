#pragma once

#include <span>
#include <vector>

#include "minkpair/vec.hpp"

namespace minkpair {

/// Pointed closed convex cone in the plane: {0}, a ray, or a wedge of
/// opening strictly less than pi. Half-planes and lines are rejected.
class Cone2 {
 public:
  enum class Kind { Trivial, Ray, Wedge };

  Cone2() = default;
  static Cone2 trivial() { return Cone2(); }
  static Cone2 ray(const Direction2& g);
  static Cone2 wedge(const Direction2& a, const Direction2& b);
  /// Cone generated by an arbitrary finite set; throws Error if not pointed.
  static Cone2 from_generators(std::span<const Direction2> generators);

  Kind kind() const { return kind_; }
  bool is_trivial() const { return kind_ == Kind::Trivial; }
  /// Trivial: none; ray: {g}; wedge: {a, b} with b counterclockwise of a.
  const std::vector<Direction2>& generators() const { return generators_; }

  /// Generator along which the boundary leaves the chain when traversed
  /// counterclockwise (a for a wedge, g for a ray).
  const Direction2& exit_generator() const;
  /// Generator along which the boundary arrives (b for a wedge, g for a ray).
  const Direction2& entry_generator() const;

  /// u0: (1,0) when trivial, -g for a ray, normalize(-a-b) for a wedge.
  /// Always lies in the interior of the polar cone.
  Direction2 reference_direction() const;
  /// Direction from which admissible normals are ordered counterclockwise.
  Direction2 arc_start() const;

  bool contains(const Point2& v) const;
  /// u in the closed polar cone: <u, g> <= 0 for every generator.
  bool in_polar(const Direction2& u) const;

  friend bool operator==(const Cone2&, const Cone2&) = default;

 private:
  Kind kind_ = Kind::Trivial;
  std::vector<Direction2> generators_;
};

/// Pointed polyhedral cone in space given by a minimal generating set.
/// An empty generator list is the trivial cone {0}.
class Cone3 {
 public:
  Cone3() = default;
  /// Canonicalizes (dedupe, drops generators inside the cone of the others,
  /// sorts) and throws Error if the cone contains a line.
  explicit Cone3(std::span<const Direction3> generators);

  bool is_trivial() const { return generators_.empty(); }
  const std::vector<Direction3>& generators() const { return generators_; }
  bool contains(const Point3& v) const;
  bool in_polar(const Direction3& u) const;

  friend bool operator==(const Cone3&, const Cone3&) = default;

 private:
  std::vector<Direction3> generators_;
};

/// <u, g> < 0 for every generator g (vacuously true for the trivial cone).
bool in_polar_interior(const Direction2& u, const Cone2& cone);
bool in_polar_interior(const Direction3& u, const Cone3& cone);

}  // namespace minkpair
