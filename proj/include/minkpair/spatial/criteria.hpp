#pragma once

#include <utility>
#include <vector>

#include "minkpair/spatial/vpolytope3.hpp"

namespace minkpair {

/// An edge of the bounded part together with the directions u for which the
/// support set is exactly that edge and bounded: relint of its normal cone
/// intersected with the interior of the polar of the recession cone.
struct EdgeWithNormalCone {
  Point3 from;
  Point3 to;
  std::vector<HomogeneousConstraint> normal_cone;

  Point3 vector() const { return to - from; }
};

std::vector<EdgeWithNormalCone> bounded_edges(const VPolytope3& p);

/// Whether the face (vertex set of a point, segment or planar polygon)
/// contains a translate of the segment [0, d].
bool contains_translate(const std::vector<Point3>& face, const Point3& d);

/// P is a summand of K: every bounded support set K(u) with P(u) an edge
/// contains a translate of P(u). Throws Error on cone mismatch.
bool summand_criterion3(const VPolytope3& p, const VPolytope3& k);

/// Pairs (edge of A, edge of B) that are parallel and are both the bounded
/// support set for one common direction. Empty iff the pair is reduced.
std::vector<std::pair<EdgeWithNormalCone, EdgeWithNormalCone>> equiparallel_edges(
    const VPolytope3& a, const VPolytope3& b);

}  // namespace minkpair
