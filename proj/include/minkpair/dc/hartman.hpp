#pragma once

#include "minkpair/dc/pl_function.hpp"
#include "minkpair/planar/pairs.hpp"

namespace minkpair {

/// Representation g - h of a dc-function; both parts share one domain.
struct DcPair {
  PLConvexFn g;
  PLConvexFn h;

  DcPair(PLConvexFn g_, PLConvexFn h_);
};

/// Cone {(y, t) : t <= -max(a y, b y)} shared by every hypograph set over [a, b].
Cone2 hypograph_cone(const Rational& a, const Rational& b);

/// Hypograph of -g*, a V-polygon whose support function satisfies
/// h(x, 1) = g(x) on the domain.
VPolygon to_hypograph_set(const PLConvexFn& g);

/// x -> h_A(x, 1) on [a, b]. Throws Error if A's cone is not the hypograph
/// cone of the domain.
PLConvexFn from_set(const VPolygon& a, const Rational& lower, const Rational& upper);

/// Equivalent pair (g', h') with g' - h' = g - h, h' >= 0, h'(0) = 0, whose
/// sets form a 0-minimal pair with B below the horizontal axis.
DcPair hartman_minimize(const DcPair& p);

/// The sets version of the pair returned by hartman_minimize.
PolygonPair hartman_sets(const DcPair& p);

/// 0-minimal and h_B(0, 1) <= 0.
bool is_H_minimal(const VPolygon& a, const VPolygon& b);

}  // namespace minkpair
