#pragma once

#include <optional>
#include <vector>

#include "minkpair/planar/vpolygon.hpp"

namespace minkpair {

struct PolygonPair {
  VPolygon first;
  VPolygon second;
};

/// Normals carried by both measures (parallel edges on the same side).
std::vector<Direction2> common_normals(const VPolygon& a, const VPolygon& b);

/// (A, B) ~ (C, D)  iff  A + D = B + C.
bool are_equivalent(const VPolygon& a, const VPolygon& b, const VPolygon& c,
                    const VPolygon& d);

/// Equivalent 0-minimal pair: both measures lose their common infimum, B'
/// is anchored at the origin and A' at A.anchor - B.anchor. Requires a
/// nontrivial cone; the result is checked before returning.
PolygonPair reduce_pair(const VPolygon& a, const VPolygon& b);

/// Measures share no normal and the origin lies on the part of B's boundary
/// exposed by admissible normals. Requires a nontrivial cone.
bool is_zero_minimal(const VPolygon& a, const VPolygon& b);

/// Minimality test for bounded polygons: at most one shared normal.
bool is_minimal_bounded(const VPolygon& a, const VPolygon& b);

struct SummandResult {
  bool is_summand = false;
  /// C with A + C = K, present iff is_summand.
  std::optional<VPolygon> complement;
};

SummandResult is_summand(const VPolygon& a, const VPolygon& k);

/// Edge-containment test: for every edge normal u of the bounded polygon P,
/// the support set K(u) is empty or contains a translate of P(u).
bool polygon_summand_check(const VPolygon& p, const VPolygon& k);

/// Boundary chain of B made of points x with B intersected with (x - V)
/// equal to {x}. Throws unless (A, B) is 0-minimal.
std::vector<Point2> kernel_of_minimality(const VPolygon& a, const VPolygon& b);

/// Whether the point lies on the closed polyline through `chain`.
bool on_chain(const std::vector<Point2>& chain, const Point2& p);

}  // namespace minkpair
