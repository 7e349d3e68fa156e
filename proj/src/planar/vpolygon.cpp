#include "minkpair/planar/vpolygon.hpp"

#include <algorithm>

#include "minkpair/error.hpp"
#include "minkpair/hull2.hpp"

namespace minkpair {

std::pair<Direction2, Rational> edge_normal(const Point2& edge) {
  const Direction2 u = normalize_direction(Point2{edge.y, -edge.x});
  const Point2 t = rot90(u).vec();
  return {u, dot(edge, t) / dot(t, t)};
}

VPolygon::VPolygon(Cone2 cone, Point2 anchor, EdgeMeasure measure)
    : cone_(std::move(cone)), anchor_(std::move(anchor)), measure_(std::move(measure)) {
  for (const auto& [u, c] : measure_.entries()) {
    if (!in_polar_interior(u, cone_)) {
      throw Error("edge normal is not admissible for the recession cone");
    }
  }
  if (cone_.is_trivial() && measure_.edge_sum() != Point2{}) {
    throw Error("edge measure of a bounded polygon does not close");
  }
  build_chain();
}

void VPolygon::build_chain() {
  const Direction2 u0 = cone_.reference_direction();
  const Direction2 start = cone_.arc_start();
  const auto entries = measure_.ordered(start);

  Point2 pos = anchor_ - (measure_.coefficient(u0) / Rational(2)) * rot90(u0).vec();
  for (const auto& e : entries) {
    if (ccw_compare(e.normal, u0, start) >= 0) break;
    pos -= e.coefficient * rot90(e.normal).vec();
  }
  chain_.assign(1, pos);
  for (const auto& e : entries) {
    pos += e.coefficient * rot90(e.normal).vec();
    chain_.push_back(pos);
  }
  if (cone_.is_trivial() && chain_.size() > 1) chain_.pop_back();
}

VPolygon VPolygon::from_points(std::span<const Point2> points, const Cone2& cone) {
  const auto hull = convex_hull_2d(points);
  EdgeMeasure measure;
  if (hull.size() > 1) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto [u, lambda] = edge_normal(hull[(i + 1) % hull.size()] - hull[i]);
      if (in_polar_interior(u, cone)) measure.add(u, lambda);
    }
  }
  const Direction2 u0 = cone.reference_direction();
  Rational best = dot(u0, hull.front());
  for (const auto& p : hull) best = max(best, dot(u0, p));
  std::vector<Point2> face;
  for (const auto& p : hull) {
    if (dot(u0, p) == best) face.push_back(p);
  }
  const Point2 anchor = Rational(1, 2) * (face.front() + face.back());
  return VPolygon(cone, anchor, std::move(measure));
}

VPolygon VPolygon::cone_at(const Cone2& cone, const Point2& apex) {
  return VPolygon(cone, apex, EdgeMeasure());
}

Support VPolygon::support(const Direction2& u) const {
  Support s;
  if (!cone_.in_polar(u)) return s;
  Rational best = dot(u, chain_.front());
  for (const auto& p : chain_) best = max(best, dot(u, p));
  for (const auto& p : chain_) {
    if (dot(u, p) == best) s.face.points.push_back(p);
  }
  std::sort(s.face.points.begin(), s.face.points.end());
  s.value = best;
  if (!cone_.is_trivial()) {
    const Direction2& out = cone_.exit_generator();
    const Direction2& in = cone_.entry_generator();
    if (u == rot_cw(out)) s.face.rays.emplace_back(chain_.back(), out);
    if (u == rot90(in)) s.face.rays.emplace_back(chain_.front(), in);
  }
  return s;
}

bool VPolygon::contains(const Point2& p) const {
  std::vector<Direction2> normals = {Direction2(1, 0), Direction2(-1, 0), Direction2(0, 1),
                                     Direction2(0, -1), cone_.reference_direction()};
  auto add_family = [&](const Direction2& d) {
    normals.push_back(d);
    normals.push_back(-d);
    normals.push_back(rot90(d));
    normals.push_back(rot_cw(d));
  };
  for (const auto& u : measure_.directions()) add_family(u);
  for (const auto& g : cone_.generators()) add_family(g);
  for (const auto& u : normals) {
    const Support s = support(u);
    if (s.finite() && dot(u, p) > *s.value) return false;
  }
  return true;
}

VPolygon translate(const VPolygon& a, const Point2& v) {
  return VPolygon(a.cone(), a.anchor() + v, a.measure());
}

VPolygon minkowski_sum(const VPolygon& a, const VPolygon& b) {
  if (!(a.cone() == b.cone())) throw Error("incompatible recession cones");
  return VPolygon(a.cone(), a.anchor() + b.anchor(), a.measure() + b.measure());
}

VPolygon scale(const VPolygon& a, const Rational& t) {
  if (t.sign() < 0) throw Error("negative scale factor");
  if (t.is_zero()) return VPolygon::cone_at(a.cone());
  return VPolygon(a.cone(), t * a.anchor(), t * a.measure());
}

bool is_subset(const VPolygon& a, const VPolygon& c) {
  for (const auto& g : a.cone().generators()) {
    if (!c.cone().contains(g.vec())) return false;
  }
  return std::all_of(a.chain().begin(), a.chain().end(),
                     [&](const Point2& p) { return c.contains(p); });
}

}  // namespace minkpair
