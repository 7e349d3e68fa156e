#include "minkpair/planar/pairs.hpp"

#include "minkpair/error.hpp"

namespace minkpair {

namespace {

void require_same_cone(const VPolygon& a, const VPolygon& b) {
  if (!(a.cone() == b.cone())) throw Error("incompatible recession cones");
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (!cross(b - a, p - a).is_zero()) return false;
  return dot(p - a, p - b).sign() <= 0;
}

}  // namespace

std::vector<Direction2> common_normals(const VPolygon& a, const VPolygon& b) {
  return measure_inf(a.measure(), b.measure()).directions();
}

bool are_equivalent(const VPolygon& a, const VPolygon& b, const VPolygon& c,
                    const VPolygon& d) {
  return minkowski_sum(a, d) == minkowski_sum(b, c);
}

bool on_chain(const std::vector<Point2>& chain, const Point2& p) {
  if (chain.size() == 1) return chain.front() == p;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (on_segment(chain[i], chain[i + 1], p)) return true;
  }
  return false;
}

PolygonPair reduce_pair(const VPolygon& a, const VPolygon& b) {
  require_same_cone(a, b);
  if (a.cone().is_trivial()) {
    throw Error("reduction requires a nontrivial cone; use bounded-pair tools");
  }
  const EdgeMeasure inf = measure_inf(a.measure(), b.measure());
  PolygonPair out{VPolygon(a.cone(), a.anchor() - b.anchor(), a.measure() - inf),
                  VPolygon(b.cone(), Point2{}, b.measure() - inf)};
  if (!are_equivalent(out.first, out.second, a, b) || !is_zero_minimal(out.first, out.second)) {
    throw Error("internal error: reduced pair failed its postcondition");
  }
  return out;
}

bool is_zero_minimal(const VPolygon& a, const VPolygon& b) {
  require_same_cone(a, b);
  if (a.cone().is_trivial()) {
    throw Error("0-minimality is decided only for nontrivial cones; use is_minimal_bounded");
  }
  return measure_inf(a.measure(), b.measure()).empty() && on_chain(b.chain(), Point2{});
}

bool is_minimal_bounded(const VPolygon& a, const VPolygon& b) {
  if (!a.cone().is_trivial() || !b.cone().is_trivial()) {
    throw Error("bounded minimality test requires bounded polygons");
  }
  return common_normals(a, b).size() <= 1;
}

SummandResult is_summand(const VPolygon& a, const VPolygon& k) {
  require_same_cone(a, k);
  if (!precedes(a.measure(), k.measure())) return {};
  return {true, VPolygon(k.cone(), k.anchor() - a.anchor(), k.measure() - a.measure())};
}

bool polygon_summand_check(const VPolygon& p, const VPolygon& k) {
  if (!p.cone().is_trivial()) throw Error("summand check expects a bounded polygon P");
  const Cone2& v = k.cone();
  for (const auto& [u, lambda] : p.measure().entries()) {
    // Outside the polar K(u) is empty; on its boundary K(u) holds a ray
    // parallel to P(u). Only bounded support sets constrain P.
    if (!in_polar_interior(u, v)) continue;
    if (k.measure().coefficient(u) < lambda) return false;
  }
  return true;
}

std::vector<Point2> kernel_of_minimality(const VPolygon& a, const VPolygon& b) {
  if (!is_zero_minimal(a, b)) {
    throw Error("kernel defined only relative to 0-minimal pairs");
  }
  return b.chain();
}

}  // namespace minkpair
