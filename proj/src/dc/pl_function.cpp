#include "minkpair/dc/pl_function.hpp"

#include <algorithm>

#include "minkpair/error.hpp"

namespace minkpair {

PLConvexFn::PLConvexFn(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.size() != values.size()) {
    throw Error("breakpoints and values differ in length");
  }
  if (breakpoints.size() < 2) throw Error("a function needs at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw Error("breakpoints must be strictly increasing");
    }
  }
  if (breakpoints.front().sign() >= 0 || breakpoints.back().sign() <= 0) {
    throw Error("domain must contain 0 in its interior");
  }
  breakpoints_.push_back(breakpoints.front());
  values_.push_back(values.front());
  Rational last_slope;
  bool have_slope = false;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const Rational s = (values[i] - values[i - 1]) / (breakpoints[i] - breakpoints[i - 1]);
    if (have_slope && s < last_slope) throw Error("function is not convex");
    if (have_slope && s == last_slope) {
      breakpoints_.back() = breakpoints[i];
      values_.back() = values[i];
    } else {
      breakpoints_.push_back(breakpoints[i]);
      values_.push_back(values[i]);
    }
    last_slope = s;
    have_slope = true;
  }
}

std::vector<Rational> PLConvexFn::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    out.push_back((values_[i] - values_[i - 1]) / (breakpoints_[i] - breakpoints_[i - 1]));
  }
  return out;
}

Rational PLConvexFn::operator()(const Rational& x) const {
  if (x < lower() || x > upper()) throw Error("argument outside the domain");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.end()) return values_.back();
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  const Rational t = (x - breakpoints_[i - 1]) / (breakpoints_[i] - breakpoints_[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

ConjugateFn::ConjugateFn(std::vector<Rational> knots, std::vector<Rational> values,
                         Rational left_slope, Rational right_slope)
    : knots_(std::move(knots)),
      values_(std::move(values)),
      left_slope_(std::move(left_slope)),
      right_slope_(std::move(right_slope)) {
  if (knots_.empty() || knots_.size() != values_.size()) {
    throw Error("conjugate needs matching nonempty knots and values");
  }
}

Rational ConjugateFn::operator()(const Rational& y) const {
  if (y <= knots_.front()) return values_.front() + left_slope_ * (y - knots_.front());
  if (y >= knots_.back()) return values_.back() + right_slope_ * (y - knots_.back());
  auto it = std::upper_bound(knots_.begin(), knots_.end(), y);
  const auto i = static_cast<std::size_t>(it - knots_.begin());
  const Rational t = (y - knots_[i - 1]) / (knots_[i] - knots_[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

ConjugateFn conjugate(const PLConvexFn& g) {
  // The maximum of x y - g(x) is attained at a breakpoint; at y equal to the
  // slope of piece i both of its endpoints attain it.
  const auto slopes = g.slopes();
  std::vector<Rational> values;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    values.push_back(g.breakpoints()[i] * slopes[i] - g.values()[i]);
  }
  return ConjugateFn(slopes, std::move(values), g.lower(), g.upper());
}

PLConvexFn conjugate(const ConjugateFn& s) {
  const auto& y = s.knots();
  std::vector<Rational> xs{s.left_slope()};
  for (std::size_t j = 1; j < y.size(); ++j) {
    xs.push_back((s.values()[j] - s.values()[j - 1]) / (y[j] - y[j - 1]));
  }
  xs.push_back(s.right_slope());
  std::vector<Rational> values;
  for (const auto& x : xs) {
    Rational best = x * y[0] - s.values()[0];
    for (std::size_t j = 1; j < y.size(); ++j) best = max(best, x * y[j] - s.values()[j]);
    values.push_back(best);
  }
  return PLConvexFn(std::move(xs), std::move(values));
}

PLConvexFn operator+(const PLConvexFn& f, const PLConvexFn& g) {
  if (f.lower() != g.lower() || f.upper() != g.upper()) throw Error("domains differ");
  std::vector<Rational> xs = f.breakpoints();
  xs.insert(xs.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> values;
  for (const auto& x : xs) values.push_back(f(x) + g(x));
  return PLConvexFn(std::move(xs), std::move(values));
}

}  // namespace minkpair
