#pragma once

#include <map>
#include <vector>

#include "minkpair/vec.hpp"

namespace minkpair {

/// Atomic measure on outer-normal directions: at each normal u the
/// coefficient lambda > 0 such that the edge vector is lambda * rot90(u).
///
/// Stored in a lexicographic map for canonical equality; use `ordered` to
/// walk the directions counterclockwise from a given start.
class EdgeMeasure {
 public:
  struct Entry {
    Direction2 normal;
    Rational coefficient;
  };

  EdgeMeasure() = default;

  /// Adds lambda to the coefficient at u. Throws Error unless lambda > 0.
  void add(const Direction2& u, const Rational& lambda);

  Rational coefficient(const Direction2& u) const;
  bool has(const Direction2& u) const { return entries_.count(u) != 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::vector<Direction2> directions() const;
  /// Entries sorted counterclockwise starting at `start`.
  std::vector<Entry> ordered(const Direction2& start) const;
  /// Sum of coefficient(u) * rot90(u): zero iff the edges close up.
  Point2 edge_sum() const;

  const std::map<Direction2, Rational>& entries() const { return entries_; }

  friend bool operator==(const EdgeMeasure&, const EdgeMeasure&) = default;

 private:
  std::map<Direction2, Rational> entries_;
};

EdgeMeasure operator+(const EdgeMeasure& a, const EdgeMeasure& b);
/// Directionwise difference; throws Error if any coefficient would go negative.
EdgeMeasure operator-(const EdgeMeasure& a, const EdgeMeasure& b);
EdgeMeasure operator*(const Rational& t, const EdgeMeasure& m);

/// Lattice infimum: entries present in both, with the smaller coefficient.
EdgeMeasure measure_inf(const EdgeMeasure& a, const EdgeMeasure& b);

/// Pointwise a <= b on every direction (a precedes b as a summand).
bool precedes(const EdgeMeasure& a, const EdgeMeasure& b);

}  // namespace minkpair
