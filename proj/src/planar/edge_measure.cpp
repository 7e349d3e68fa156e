#include "minkpair/planar/edge_measure.hpp"

#include <algorithm>

#include "minkpair/error.hpp"

namespace minkpair {

void EdgeMeasure::add(const Direction2& u, const Rational& lambda) {
  if (lambda.sign() <= 0) throw Error("edge coefficients must be positive");
  auto [it, inserted] = entries_.try_emplace(u, lambda);
  if (!inserted) it->second += lambda;
}

Rational EdgeMeasure::coefficient(const Direction2& u) const {
  const auto it = entries_.find(u);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Direction2> EdgeMeasure::directions() const {
  std::vector<Direction2> out;
  out.reserve(entries_.size());
  for (const auto& [u, c] : entries_) out.push_back(u);
  return out;
}

std::vector<EdgeMeasure::Entry> EdgeMeasure::ordered(const Direction2& start) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [u, c] : entries_) out.push_back({u, c});
  std::sort(out.begin(), out.end(), [&](const Entry& a, const Entry& b) {
    return ccw_compare(a.normal, b.normal, start) < 0;
  });
  return out;
}

Point2 EdgeMeasure::edge_sum() const {
  Point2 s;
  for (const auto& [u, c] : entries_) s += c * rot90(u).vec();
  return s;
}

EdgeMeasure operator+(const EdgeMeasure& a, const EdgeMeasure& b) {
  EdgeMeasure out = a;
  for (const auto& [u, c] : b.entries()) out.add(u, c);
  return out;
}

EdgeMeasure operator-(const EdgeMeasure& a, const EdgeMeasure& b) {
  EdgeMeasure out;
  for (const auto& [u, c] : a.entries()) {
    const Rational d = c - b.coefficient(u);
    if (d.sign() < 0) throw Error("edge measure difference is negative");
    if (d.sign() > 0) out.add(u, d);
  }
  for (const auto& [u, c] : b.entries()) {
    if (!a.has(u)) throw Error("edge measure difference is negative");
  }
  return out;
}

EdgeMeasure operator*(const Rational& t, const EdgeMeasure& m) {
  if (t.sign() < 0) throw Error("negative scale factor");
  EdgeMeasure out;
  if (t.is_zero()) return out;
  for (const auto& [u, c] : m.entries()) out.add(u, t * c);
  return out;
}

EdgeMeasure measure_inf(const EdgeMeasure& a, const EdgeMeasure& b) {
  EdgeMeasure out;
  for (const auto& [u, c] : a.entries()) {
    if (b.has(u)) out.add(u, min(c, b.coefficient(u)));
  }
  return out;
}

bool precedes(const EdgeMeasure& a, const EdgeMeasure& b) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [&](const auto& e) { return e.second <= b.coefficient(e.first); });
}

}  // namespace minkpair
