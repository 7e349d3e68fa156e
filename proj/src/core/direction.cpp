#include <array>
#include <ostream>

#include "minkpair/error.hpp"
#include "minkpair/vec.hpp"

namespace minkpair {

namespace {

std::strong_ordering compare_integers(const Integer& a, const Integer& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// 0 for directions in the half-open half-turn [start, start + pi), 1 otherwise.
int half_turn(const Direction2& w, const Direction2& start) {
  const int c = sgn(cross(start, w));
  if (c > 0) return 0;
  if (c < 0) return 1;
  return sgn(dot(start, w)) > 0 ? 0 : 1;
}

}  // namespace

Direction2::Direction2(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ == 0 && y_ == 0) throw Error("degenerate direction");
  Integer g;
  mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
  if (g != 1) {
    x_ /= g;
    y_ /= g;
  }
}

Direction3::Direction3(Integer x, Integer y, Integer z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (x_ == 0 && y_ == 0 && z_ == 0) throw Error("degenerate direction");
  Integer g;
  mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z_.get_mpz_t());
  if (g != 1) {
    x_ /= g;
    y_ /= g;
    z_ /= g;
  }
}

std::strong_ordering operator<=>(const Direction2& a, const Direction2& b) {
  if (auto c = compare_integers(a.x_, b.x_); c != 0) return c;
  return compare_integers(a.y_, b.y_);
}

std::strong_ordering operator<=>(const Direction3& a, const Direction3& b) {
  if (auto c = compare_integers(a.x_, b.x_); c != 0) return c;
  if (auto c = compare_integers(a.y_, b.y_); c != 0) return c;
  return compare_integers(a.z_, b.z_);
}

Direction2 normalize_direction(const Integer& x, const Integer& y) { return Direction2(x, y); }

Direction3 normalize_direction(const Integer& x, const Integer& y, const Integer& z) {
  return Direction3(x, y, z);
}

Integer common_denominator(std::span<const Rational> values) {
  Integer m = 1;
  for (const auto& v : values) {
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.get().get_den_mpz_t());
  }
  return m;
}

Direction2 normalize_direction(const Point2& v) {
  const std::array<Rational, 2> c{v.x, v.y};
  const Integer m = common_denominator(c);
  return Direction2((v.x * Rational(m)).numerator(), (v.y * Rational(m)).numerator());
}

Direction3 normalize_direction(const Point3& v) {
  const std::array<Rational, 3> c{v.x, v.y, v.z};
  const Integer m = common_denominator(c);
  return Direction3((v.x * Rational(m)).numerator(), (v.y * Rational(m)).numerator(),
                    (v.z * Rational(m)).numerator());
}

std::strong_ordering ccw_compare(const Direction2& u, const Direction2& v,
                                 const Direction2& start) {
  if (u == v) return std::strong_ordering::equal;
  const int hu = half_turn(u, start);
  const int hv = half_turn(v, start);
  if (hu != hv) return hu < hv ? std::strong_ordering::less : std::strong_ordering::greater;
  // Same half turn: u precedes v iff v is strictly counterclockwise of u.
  // Distinct primitive directions in one half turn are never parallel.
  return sgn(cross(u, v)) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}
std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << '(' << p.x << ", " << p.y << ", " << p.z << ')';
}
std::ostream& operator<<(std::ostream& os, const Direction2& d) {
  return os << '(' << d.x() << ", " << d.y() << ')';
}
std::ostream& operator<<(std::ostream& os, const Direction3& d) {
  return os << '(' << d.x() << ", " << d.y() << ", " << d.z() << ')';
}

}  // namespace minkpair
