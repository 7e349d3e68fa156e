#pragma once

#include <vector>

#include "minkpair/rational.hpp"

namespace minkpair {

/// Convex piecewise-linear function on a closed interval [a, b], a < 0 < b,
/// given by its values at the breakpoints (both endpoints included).
/// Neighboring pieces of equal slope are merged on construction.
class PLConvexFn {
 public:
  /// Throws Error if breakpoints are not strictly increasing, do not
  /// straddle 0, or the slopes decrease.
  PLConvexFn(std::vector<Rational> breakpoints, std::vector<Rational> values);

  const Rational& lower() const { return breakpoints_.front(); }
  const Rational& upper() const { return breakpoints_.back(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  /// Slope of each piece, strictly increasing.
  std::vector<Rational> slopes() const;

  /// Throws Error outside [lower, upper].
  Rational operator()(const Rational& x) const;

  friend bool operator==(const PLConvexFn&, const PLConvexFn&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// Convex conjugate of a PLConvexFn: finite and piecewise linear on the
/// whole line, with knots at the slopes of the original function and
/// asymptotic slopes equal to the domain endpoints.
class ConjugateFn {
 public:
  ConjugateFn(std::vector<Rational> knots, std::vector<Rational> values, Rational left_slope,
              Rational right_slope);

  const std::vector<Rational>& knots() const { return knots_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  Rational operator()(const Rational& y) const;

 private:
  std::vector<Rational> knots_;
  std::vector<Rational> values_;
  Rational left_slope_;
  Rational right_slope_;
};

/// g*(y) = max over x in [a, b] of x y - g(x).
ConjugateFn conjugate(const PLConvexFn& g);
/// Conjugate restricted back to the interval of asymptotic slopes.
PLConvexFn conjugate(const ConjugateFn& s);

PLConvexFn operator+(const PLConvexFn& f, const PLConvexFn& g);

}  // namespace minkpair
