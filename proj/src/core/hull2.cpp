#include "minkpair/hull2.hpp"

#include <algorithm>

#include "minkpair/error.hpp"

namespace minkpair {

namespace {

int orientation(const Point2& o, const Point2& a, const Point2& b) {
  return cross(a - o, b - o).sign();
}

}  // namespace

std::vector<Point2> convex_hull_2d(std::span<const Point2> points) {
  if (points.empty()) throw Error("convex hull of an empty point set");
  std::vector<Point2> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return p;

  // Andrew's monotone chain; popping on orientation <= 0 drops collinear points.
  std::vector<Point2> hull(2 * p.size());
  std::size_t k = 0;
  for (const auto& q : p) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace minkpair
