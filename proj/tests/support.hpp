#pragma once

// Random instance generators and brute-force oracles shared by the tests.
// Oracles work from raw generating points and never call the library's
// canonical forms, hulls or support routines.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "minkpair/cone.hpp"
#include "minkpair/dc/pl_function.hpp"
#include "minkpair/planar/vpolygon.hpp"

namespace testing_support {

using minkpair::Cone2;
using minkpair::Direction2;
using minkpair::Integer;
using minkpair::Point2;
using minkpair::Point3;
using minkpair::Rational;

using Rng = std::mt19937;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rational(Rng& rng, long lo, long hi, long max_den = 1) {
  const long den = uniform(rng, 1, max_den);
  return Rational(Integer(uniform(rng, lo * den, hi * den)), Integer(den));
}

inline Point2 point2(Rng& rng, long lo, long hi, long max_den = 1) {
  return {rational(rng, lo, hi, max_den), rational(rng, lo, hi, max_den)};
}

inline Point3 point3(Rng& rng, long lo, long hi, long max_den = 1) {
  return {rational(rng, lo, hi, max_den), rational(rng, lo, hi, max_den),
          rational(rng, lo, hi, max_den)};
}

inline Direction2 direction2(Rng& rng, long r = 9) {
  for (;;) {
    const long x = uniform(rng, -r, r), y = uniform(rng, -r, r);
    if (x != 0 || y != 0) return Direction2(x, y);
  }
}

/// Random pointed wedge: two directions with positive cross product.
inline Cone2 wedge(Rng& rng) {
  for (;;) {
    const Direction2 a = direction2(rng, 4), b = direction2(rng, 4);
    if (sgn(cross(a, b)) > 0) return Cone2::wedge(a, b);
  }
}

inline std::vector<Point2> points2(Rng& rng, std::size_t max_count, long r = 9) {
  std::vector<Point2> pts;
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_count)));
  for (std::size_t i = 0; i < n; ++i) pts.push_back(point2(rng, -r, r));
  return pts;
}

inline Point2 vec(const Direction2& d) { return d.vec(); }

/// Brute-force support value of conv(points) + cone: nullopt is +infinity.
inline std::optional<Rational> brute_support(const std::vector<Point2>& points, const Cone2& cone,
                                             const Point2& u) {
  for (const auto& g : cone.generators()) {
    if (dot(u, g.vec()).sign() > 0) return std::nullopt;
  }
  Rational best = dot(u, points.front());
  for (const auto& p : points) best = minkpair::max(best, dot(u, p));
  return best;
}

/// O(n^3) hull edges: ordered pairs (p, q), p != q, with every point on the
/// left of p->q or on the closed segment. Collinear interior points are skipped.
inline std::vector<std::pair<Point2, Point2>> brute_hull_edges(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<Point2, Point2>> out;
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      if (p == q) continue;
      bool ok = true;
      for (const auto& r : pts) {
        const int c = cross(q - p, r - p).sign();
        if (c < 0) { ok = false; break; }
        if (c == 0 && dot(r - p, r - q).sign() > 0) { ok = false; break; }
      }
      if (ok) out.emplace_back(p, q);
    }
  }
  return out;
}

/// Membership in conv(points) + cone from halfspaces of the brute hull of
/// points together with points shifted by each generator.
inline bool brute_contains(const std::vector<Point2>& points, const Cone2& cone, const Point2& x) {
  std::vector<Point2> pts = points;
  for (const auto& p : points) {
    for (const auto& g : cone.generators()) pts.push_back(p + g.vec());
  }
  const auto edges = brute_hull_edges(pts);
  if (edges.empty()) return std::find(pts.begin(), pts.end(), x) != pts.end();
  bool collinear = true;
  for (const auto& r : pts) {
    if (cross(edges.front().second - edges.front().first, r - edges.front().first).sign() != 0) {
      collinear = false;
    }
  }
  if (collinear && cross(edges.front().second - edges.front().first, x - edges.front().first).sign() != 0) {
    return false;
  }
  for (const auto& [p, q] : edges) {
    const Point2 n{(q - p).y, -(q - p).x};  // outward normal of a CCW edge
    bool in_polar = true;
    for (const auto& g : cone.generators()) {
      if (dot(n, g.vec()).sign() > 0) in_polar = false;
    }
    if (!in_polar) continue;
    if (dot(n, x) > dot(n, p)) return false;
  }
  // Directions along a ray cone are unbounded; segments in the ray direction
  // need their back end checked too.
  if (collinear) {
    const Point2 d = edges.front().second - edges.front().first;
    Rational lo = dot(d, pts.front()), hi = lo;
    for (const auto& r : pts) {
      lo = minkpair::min(lo, dot(d, r));
      hi = minkpair::max(hi, dot(d, r));
    }
    const Rational t = dot(d, x);
    bool unbounded_hi = false, unbounded_lo = false;
    for (const auto& g : cone.generators()) {
      if (dot(d, g.vec()).sign() > 0) unbounded_hi = true;
      if (dot(d, g.vec()).sign() < 0) unbounded_lo = true;
    }
    if ((!unbounded_lo && t < lo) || (!unbounded_hi && t > hi)) return false;
  }
  return true;
}

/// Random convex piecewise-linear function on [lo, hi] with `pieces` pieces.
inline minkpair::PLConvexFn random_pl(Rng& rng, const Rational& lo, const Rational& hi,
                                      int pieces, long den = 8) {
  std::vector<Rational> xs{lo, hi};
  while (static_cast<int>(xs.size()) < pieces + 1) {
    const Rational x = lo + (hi - lo) * Rational(Integer(uniform(rng, 1, den - 1)), Integer(den));
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<Rational> slopes;
  for (int i = 0; i < pieces; ++i) slopes.push_back(rational(rng, -6, 6, 2));
  std::sort(slopes.begin(), slopes.end());
  std::vector<Rational> values{rational(rng, -3, 3, 2)};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    values.push_back(values.back() + slopes[i - 1] * (xs[i] - xs[i - 1]));
  }
  return minkpair::PLConvexFn(xs, values);
}

/// Facet of a brute-force 3D hull: outward normal (unnormalized) and the
/// indices of the input points on its plane.
struct BruteFacet {
  Point3 normal;
  Rational offset;
  std::vector<std::size_t> on_plane;
};

inline std::vector<Point3> dedupe(std::vector<Point3> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// O(n^4) facet enumeration over all point triples. Input must be deduped.
inline std::vector<BruteFacet> brute_facets(const std::vector<Point3>& pts) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<BruteFacet> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Point3 normal = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (normal == Point3{}) continue;
        int above = 0, below = 0;
        std::vector<std::size_t> on;
        for (std::size_t m = 0; m < n; ++m) {
          const int s = dot(normal, pts[m] - pts[i]).sign();
          above += s > 0;
          below += s < 0;
          if (s == 0) on.push_back(m);
        }
        if (above && below) continue;
        if (above) normal = -normal;
        if (!above && !below) continue;  // flat input
        if (seen.insert(on).second) out.push_back({normal, dot(normal, pts[i]), on});
      }
    }
  }
  return out;
}

/// Extreme points: lie on three facets with independent normals.
inline std::vector<Point3> brute_vertices(const std::vector<Point3>& pts,
                                          const std::vector<BruteFacet>& facets) {
  std::vector<Point3> out;
  for (std::size_t m = 0; m < pts.size(); ++m) {
    std::vector<Point3> normals;
    for (const auto& f : facets) {
      if (std::find(f.on_plane.begin(), f.on_plane.end(), m) != f.on_plane.end()) {
        normals.push_back(f.normal);
      }
    }
    bool extreme = false;
    for (std::size_t a = 0; a < normals.size() && !extreme; ++a) {
      for (std::size_t b = a + 1; b < normals.size() && !extreme; ++b) {
        for (std::size_t c = b + 1; c < normals.size() && !extreme; ++c) {
          extreme = !dot(cross(normals[a], normals[b]), normals[c]).is_zero();
        }
      }
    }
    if (extreme) out.push_back(pts[m]);
  }
  return out;
}

/// Edges: vertex pairs that share two distinct facets.
inline std::set<std::pair<Point3, Point3>> brute_edges(const std::vector<Point3>& pts,
                                                       const std::vector<BruteFacet>& facets) {
  const auto vertices = brute_vertices(pts, facets);
  auto on = [&](const BruteFacet& f, const Point3& p) { return dot(f.normal, p) == f.offset; };
  std::set<std::pair<Point3, Point3>> out;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      int shared = 0;
      for (const auto& f : facets) shared += on(f, vertices[a]) && on(f, vertices[b]);
      if (shared >= 2) out.emplace(vertices[a], vertices[b]);
    }
  }
  return out;
}

inline std::optional<Rational> brute_support3(const std::vector<Point3>& points,
                                              const std::vector<Point3>& generators,
                                              const Point3& u) {
  for (const auto& g : generators) {
    if (dot(u, g).sign() > 0) return std::nullopt;
  }
  Rational best = dot(u, points.front());
  for (const auto& p : points) best = minkpair::max(best, dot(u, p));
  return best;
}

/// Argmax of u over the points (deduped, sorted).
inline std::vector<Point3> brute_face3(const std::vector<Point3>& points, const Point3& u) {
  Rational best = dot(u, points.front());
  for (const auto& p : points) best = minkpair::max(best, dot(u, p));
  std::vector<Point3> out;
  for (const auto& p : points) {
    if (dot(u, p) == best) out.push_back(p);
  }
  return dedupe(out);
}

/// Halfspaces describing conv(points) + cone(generators) when
/// conv(points + {0} ∪ generators) is full-dimensional: facets of the brute
/// hull whose normals lie in the closed polar.
inline std::vector<BruteFacet> brute_halfspaces3(const std::vector<Point3>& points,
                                                 const std::vector<Point3>& generators) {
  std::vector<Point3> pts = points;
  for (const auto& p : points) {
    for (const auto& g : generators) pts.push_back(p + g);
  }
  std::vector<BruteFacet> out;
  for (auto& f : brute_facets(dedupe(pts))) {
    bool in_polar = true;
    for (const auto& g : generators) in_polar = in_polar && dot(f.normal, g).sign() <= 0;
    if (in_polar) out.push_back(std::move(f));
  }
  return out;
}

inline bool brute_contains3(const std::vector<BruteFacet>& halfspaces, const Point3& x) {
  return std::all_of(halfspaces.begin(), halfspaces.end(),
                     [&](const BruteFacet& f) { return dot(f.normal, x) <= f.offset; });
}

}  // namespace testing_support
