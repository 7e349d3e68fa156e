#pragma once

#include <span>
#include <vector>

#include "minkpair/vec.hpp"

namespace minkpair {

/// Strictly convex hull of a nonempty finite point set: vertices in
/// counterclockwise order starting at the lexicographically smallest one,
/// collinear points removed. A single point yields one vertex; collinear
/// input yields the two extreme points.
std::vector<Point2> convex_hull_2d(std::span<const Point2> points);

}  // namespace minkpair
