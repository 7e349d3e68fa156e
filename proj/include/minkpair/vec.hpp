#pragma once

#include <compare>
#include <iosfwd>
#include <span>

#include "minkpair/rational.hpp"

namespace minkpair {

struct Point2 {
  Rational x, y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;

  Point2& operator+=(const Point2& o) { x += o.x; y += o.y; return *this; }
  Point2& operator-=(const Point2& o) { x -= o.x; y -= o.y; return *this; }
  friend Point2 operator+(Point2 a, const Point2& b) { return a += b; }
  friend Point2 operator-(Point2 a, const Point2& b) { return a -= b; }
  friend Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
  friend Point2 operator*(const Rational& t, const Point2& p) { return {t * p.x, t * p.y}; }
};

struct Point3 {
  Rational x, y, z;

  friend bool operator==(const Point3&, const Point3&) = default;
  friend auto operator<=>(const Point3&, const Point3&) = default;

  Point3& operator+=(const Point3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Point3& operator-=(const Point3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  friend Point3 operator+(Point3 a, const Point3& b) { return a += b; }
  friend Point3 operator-(Point3 a, const Point3& b) { return a -= b; }
  friend Point3 operator-(const Point3& a) { return {-a.x, -a.y, -a.z}; }
  friend Point3 operator*(const Rational& t, const Point3& p) {
    return {t * p.x, t * p.y, t * p.z};
  }
};

inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Primitive integer direction in the plane: nonzero, gcd(|x|,|y|) = 1.
/// Stands in for an outer normal (cos t, sin t) without computing angles.
class Direction2 {
 public:
  /// Divides by the gcd of the components; throws Error on the zero vector.
  Direction2(Integer x, Integer y);
  Direction2(long x, long y) : Direction2(Integer(x), Integer(y)) {}

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  Point2 vec() const { return {Rational(x_), Rational(y_)}; }
  Direction2 operator-() const { return Direction2(Integer(-x_), Integer(-y_)); }

  friend bool operator==(const Direction2& a, const Direction2& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  /// Lexicographic; only used for canonical containers, not geometry.
  friend std::strong_ordering operator<=>(const Direction2& a, const Direction2& b);

 private:
  Integer x_, y_;
};

/// Primitive integer direction in space.
class Direction3 {
 public:
  Direction3(Integer x, Integer y, Integer z);
  Direction3(long x, long y, long z) : Direction3(Integer(x), Integer(y), Integer(z)) {}

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  const Integer& z() const { return z_; }
  Point3 vec() const { return {Rational(x_), Rational(y_), Rational(z_)}; }
  Direction3 operator-() const { return Direction3(Integer(-x_), Integer(-y_), Integer(-z_)); }

  friend bool operator==(const Direction3& a, const Direction3& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend std::strong_ordering operator<=>(const Direction3& a, const Direction3& b);

 private:
  Integer x_, y_, z_;
};

Direction2 normalize_direction(const Integer& x, const Integer& y);
Direction3 normalize_direction(const Integer& x, const Integer& y, const Integer& z);
/// Direction of a nonzero rational vector (scaled to integers first).
Direction2 normalize_direction(const Point2& v);
Direction3 normalize_direction(const Point3& v);

/// rot90(x, y) = (-y, x); for an outer normal u of a CCW-traversed edge the
/// edge vector is a positive multiple of rot90(u).
inline Direction2 rot90(const Direction2& u) { return Direction2(Integer(-u.y()), u.x()); }
inline Direction2 rot_cw(const Direction2& u) { return Direction2(u.y(), Integer(-u.x())); }

inline Integer dot(const Direction2& a, const Direction2& b) {
  return Integer(a.x() * b.x() + a.y() * b.y());
}
inline Integer cross(const Direction2& a, const Direction2& b) {
  return Integer(a.x() * b.y() - a.y() * b.x());
}
inline Rational dot(const Direction2& u, const Point2& p) {
  return Rational(u.x()) * p.x + Rational(u.y()) * p.y;
}
inline Integer dot(const Direction3& a, const Direction3& b) {
  return Integer(a.x() * b.x() + a.y() * b.y() + a.z() * b.z());
}
inline Rational dot(const Direction3& u, const Point3& p) {
  return Rational(u.x()) * p.x + Rational(u.y()) * p.y + Rational(u.z()) * p.z;
}

/// Total counterclockwise order of directions starting at `start`
/// (start itself is the least element). Uses only cross/dot signs.
std::strong_ordering ccw_compare(const Direction2& u, const Direction2& v,
                                 const Direction2& start);

/// Common positive multiple of the denominators, so that m*v is integral.
Integer common_denominator(std::span<const Rational> values);

std::ostream& operator<<(std::ostream& os, const Point2& p);
std::ostream& operator<<(std::ostream& os, const Point3& p);
std::ostream& operator<<(std::ostream& os, const Direction2& d);
std::ostream& operator<<(std::ostream& os, const Direction3& d);

}  // namespace minkpair
