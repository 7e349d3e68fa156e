#include "minkpair/dc/hartman.hpp"

#include <algorithm>

#include "minkpair/error.hpp"

namespace minkpair {

DcPair::DcPair(PLConvexFn g_, PLConvexFn h_) : g(std::move(g_)), h(std::move(h_)) {
  if (g.lower() != h.lower() || g.upper() != h.upper()) {
    throw Error("dc components must share a domain");
  }
}

Cone2 hypograph_cone(const Rational& a, const Rational& b) {
  // Generators (1/a, -1) and (1/b, -1), rescaled by -a > 0 and b > 0.
  return Cone2::wedge(normalize_direction(Point2{Rational(-1), a}),
                      normalize_direction(Point2{Rational(1), -b}));
}

VPolygon to_hypograph_set(const PLConvexFn& g) {
  const ConjugateFn s = conjugate(g);
  std::vector<Point2> points;
  for (std::size_t i = 0; i < s.knots().size(); ++i) {
    points.push_back({s.knots()[i], -s.values()[i]});
  }
  return VPolygon::from_points(points, hypograph_cone(g.lower(), g.upper()));
}

PLConvexFn from_set(const VPolygon& a, const Rational& lower, const Rational& upper) {
  if (!(a.cone() == hypograph_cone(lower, upper))) {
    throw Error("set does not have the recession cone of the domain");
  }
  // Admissible normals u have u.y > 0 and u.x / u.y inside the domain; they
  // are exactly the kinks of x -> h_A(x, 1).
  std::vector<Rational> xs{lower, upper};
  for (const auto& u : a.measure().directions()) xs.push_back(Rational(u.x(), u.y()));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> values;
  for (const auto& x : xs) {
    Rational best = x * a.chain().front().x + a.chain().front().y;
    for (const auto& p : a.chain()) best = max(best, x * p.x + p.y);
    values.push_back(best);
  }
  return PLConvexFn(std::move(xs), std::move(values));
}

PolygonPair hartman_sets(const DcPair& p) {
  const VPolygon a = to_hypograph_set(p.g);
  const VPolygon b = to_hypograph_set(p.h);
  const PolygonPair reduced = reduce_pair(a, b);
  auto top = reduced.second.support(Direction2(0, 1)).face.points;
  const Point2 shift = -*std::min_element(top.begin(), top.end());
  return {translate(reduced.first, shift), translate(reduced.second, shift)};
}

DcPair hartman_minimize(const DcPair& p) {
  const PolygonPair sets = hartman_sets(p);
  return DcPair(from_set(sets.first, p.g.lower(), p.g.upper()),
                from_set(sets.second, p.h.lower(), p.h.upper()));
}

bool is_H_minimal(const VPolygon& a, const VPolygon& b) {
  if (!is_zero_minimal(a, b)) return false;
  const Support top = b.support(Direction2(0, 1));
  return top.finite() && top.value->sign() <= 0;
}

}  // namespace minkpair
