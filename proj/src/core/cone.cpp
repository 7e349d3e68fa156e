#include "minkpair/cone.hpp"

#include <algorithm>

#include "minkpair/error.hpp"
#include "minkpair/feasibility.hpp"

namespace minkpair {

Cone2 Cone2::ray(const Direction2& g) {
  Cone2 c;
  c.kind_ = Kind::Ray;
  c.generators_ = {g};
  return c;
}

Cone2 Cone2::wedge(const Direction2& a, const Direction2& b) {
  const int s = sgn(cross(a, b));
  if (s == 0) {
    if (a == b) return ray(a);
    throw Error("recession cone is not pointed (contains a line)");
  }
  Cone2 c;
  c.kind_ = Kind::Wedge;
  c.generators_ = s > 0 ? std::vector<Direction2>{a, b} : std::vector<Direction2>{b, a};
  return c;
}

Cone2 Cone2::from_generators(std::span<const Direction2> generators) {
  std::vector<Direction2> g(generators.begin(), generators.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.empty()) return trivial();
  if (g.size() == 1) return ray(g[0]);

  std::vector<HomogeneousConstraint> rows;
  for (const auto& d : g) rows.push_back(constraint(d, Relation::Less));
  if (!cone_strictly_feasible(rows, 2)) {
    throw Error("recession cone is not pointed");
  }
  // Pointed: the extreme generators see every other one on one side.
  const Direction2* first = nullptr;
  const Direction2* last = nullptr;
  for (const auto& a : g) {
    const bool all_ccw = std::all_of(g.begin(), g.end(),
                                     [&](const Direction2& h) { return sgn(cross(a, h)) >= 0; });
    const bool all_cw = std::all_of(g.begin(), g.end(),
                                    [&](const Direction2& h) { return sgn(cross(h, a)) >= 0; });
    if (all_ccw) first = &a;
    if (all_cw) last = &a;
  }
  return wedge(*first, *last);
}

const Direction2& Cone2::exit_generator() const {
  if (generators_.empty()) throw Error("trivial cone has no generators");
  return generators_.front();
}

const Direction2& Cone2::entry_generator() const {
  if (generators_.empty()) throw Error("trivial cone has no generators");
  return generators_.back();
}

Direction2 Cone2::reference_direction() const {
  switch (kind_) {
    case Kind::Trivial:
      return Direction2(1, 0);
    case Kind::Ray:
      return -generators_[0];
    case Kind::Wedge:
      break;
  }
  const auto& a = generators_[0];
  const auto& b = generators_[1];
  const Direction2 sum(Integer(-a.x() - b.x()), Integer(-a.y() - b.y()));
  if (in_polar_interior(sum, *this)) return sum;
  // Unequal generator lengths can push -a-b out of the polar; the sum of the
  // polar boundary normals is always interior.
  const Point2 n = rot_cw(a).vec() + rot90(b).vec();
  return Direction2(n.x.numerator(), n.y.numerator());
}

Direction2 Cone2::arc_start() const {
  switch (kind_) {
    case Kind::Trivial:
      return reference_direction();
    case Kind::Ray:
    case Kind::Wedge:
      break;
  }
  return rot90(entry_generator());
}

bool Cone2::contains(const Point2& v) const {
  switch (kind_) {
    case Kind::Trivial:
      return v.x.is_zero() && v.y.is_zero();
    case Kind::Ray: {
      const Point2 g = generators_[0].vec();
      return cross(g, v).is_zero() && dot(g, v).sign() >= 0;
    }
    case Kind::Wedge:
      break;
  }
  const Point2 a = generators_[0].vec();
  const Point2 b = generators_[1].vec();
  return cross(a, v).sign() >= 0 && cross(v, b).sign() >= 0;
}

bool Cone2::in_polar(const Direction2& u) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Direction2& g) { return sgn(dot(u, g)) <= 0; });
}

bool in_polar_interior(const Direction2& u, const Cone2& cone) {
  const auto& g = cone.generators();
  return std::all_of(g.begin(), g.end(), [&](const Direction2& v) { return sgn(dot(u, v)) < 0; });
}

namespace {

// v in cone(others)  <=>  no u with <u,v> > 0 and <u,h> <= 0 for all h (Farkas).
bool in_generated_cone(const Point3& v, std::span<const Direction3> others) {
  if (v.x.is_zero() && v.y.is_zero() && v.z.is_zero()) return true;
  std::vector<HomogeneousConstraint> rows;
  rows.push_back(constraint(-v, Relation::Less));
  for (const auto& h : others) rows.push_back(constraint(h, Relation::LessEqual));
  return !cone_strictly_feasible(rows, 3);
}

}  // namespace

Cone3::Cone3(std::span<const Direction3> generators)
    : generators_(generators.begin(), generators.end()) {
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  if (generators_.empty()) return;

  std::vector<HomogeneousConstraint> rows;
  for (const auto& g : generators_) rows.push_back(constraint(g, Relation::Less));
  if (!cone_strictly_feasible(rows, 3)) {
    throw Error("recession cone is not pointed");
  }
  // Drop generators that are positive combinations of the remaining ones.
  for (std::size_t i = 0; i < generators_.size();) {
    std::vector<Direction3> others;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (j != i) others.push_back(generators_[j]);
    }
    if (!others.empty() && in_generated_cone(generators_[i].vec(), others)) {
      generators_.erase(generators_.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
}

bool Cone3::contains(const Point3& v) const { return in_generated_cone(v, generators_); }

bool Cone3::in_polar(const Direction3& u) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Direction3& g) { return sgn(dot(u, g)) <= 0; });
}

bool in_polar_interior(const Direction3& u, const Cone3& cone) {
  const auto& g = cone.generators();
  return std::all_of(g.begin(), g.end(), [&](const Direction3& v) { return sgn(dot(u, v)) < 0; });
}

}  // namespace minkpair
