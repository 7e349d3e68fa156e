#include <gtest/gtest.h>

#include <algorithm>

#include "minkpair/error.hpp"
#include "minkpair/planar/pairs.hpp"
#include "support.hpp"

using namespace minkpair;
using namespace testing_support;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

VPolygon poly(std::vector<Point2> pts, const Cone2& v = Cone2::trivial()) {
  return VPolygon::from_points(pts, v);
}

const Cone2 kLeftWedge = Cone2::wedge(Direction2(-1, -1), Direction2(-1, 1));
const Cone2 kUp = Cone2::ray(Direction2(0, 1));

EdgeMeasure measure(std::vector<std::pair<Direction2, Rational>> entries) {
  EdgeMeasure m;
  for (const auto& [u, c] : entries) m.add(u, c);
  return m;
}

struct Instance {
  std::vector<Point2> points;
  VPolygon set;
};

Instance random_instance(Rng& rng, const Cone2& v, std::size_t max_points = 8) {
  auto pts = points2(rng, max_points);
  return {pts, VPolygon::from_points(pts, v)};
}

std::vector<Direction2> random_admissible(Rng& rng, const Cone2& v, int count) {
  std::vector<Direction2> out;
  while (static_cast<int>(out.size()) < count) {
    const Direction2 u = direction2(rng, 20);
    if (in_polar_interior(u, v)) out.push_back(u);
  }
  return out;
}

}  // namespace

TEST(FromPoints, TriangleMeasure) {
  const VPolygon a = poly({{0, 0}, {2, 0}, {1, 1}});
  EXPECT_EQ(a.measure(), measure({{Direction2(0, -1), 2}, {Direction2(1, 1), 1}, {Direction2(-1, 1), 1}}));
  EXPECT_EQ(a.anchor(), (Point2{2, 0}));
}

TEST(FromPoints, SinglePointWithWedge) {
  const VPolygon a = poly({{5, 7}}, kLeftWedge);
  EXPECT_TRUE(a.measure().empty());
  EXPECT_EQ(a.anchor(), (Point2{5, 7}));
}

TEST(FromPoints, UnequalGeneratorLengthsAbsorbTheSegment) {
  const Cone2 v = Cone2::wedge(Direction2(1, 1), Direction2(-4, -1));
  const VPolygon a = poly({{3, 4}, {3, 6}}, v);
  EXPECT_TRUE(in_polar_interior(v.reference_direction(), v));
  // (3,6) = (3,4) + 8/3 (1,1) + 2/3 (-4,-1)
  EXPECT_EQ(a.chain(), (std::vector<Point2>{{3, 4}}));
  EXPECT_FALSE(a.contains({3, 3}));
  EXPECT_TRUE(a.contains({3, 6}));
}

TEST(FromPoints, CollinearInputCollapsesToSegment) {
  const VPolygon a = poly({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(a.measure(), measure({{Direction2(0, 1), 2}, {Direction2(0, -1), 2}}));
  EXPECT_EQ(a.chain().size(), 2u);
}

TEST(FromPoints, DropsEdgesAbsorbedByTheCone) {
  const VPolygon a = poly({{0, 0}, {2, 0}, {1, 1}}, kUp);
  EXPECT_EQ(a.measure(), measure({{Direction2(0, -1), 2}}));
  EXPECT_EQ(a.chain(), (std::vector<Point2>{{0, 0}, {2, 0}}));
}

TEST(VPolygon, RejectsInvalidCanonicalData) {
  EXPECT_THROW(VPolygon(Cone2::trivial(), {}, measure({{Direction2(0, 1), 1}})), Error);
  EXPECT_THROW(VPolygon(kLeftWedge, {}, measure({{Direction2(-1, 0), 1}})), Error);
  EXPECT_THROW(measure({{Direction2(0, 1), 0}}), Error);
}

TEST(Support, TriangleBottomFace) {
  const auto s = poly({{0, 0}, {2, 0}, {1, 1}}).support(Direction2(0, -1));
  ASSERT_TRUE(s.finite());
  EXPECT_EQ(*s.value, Rational(0));
  EXPECT_EQ(s.face.points, (std::vector<Point2>{{0, 0}, {2, 0}}));
}

TEST(Support, ApexOfWedgeAndInfinity) {
  const VPolygon a = poly({{5, 7}}, kLeftWedge);
  const auto right = a.support(Direction2(1, 0));
  EXPECT_EQ(*right.value, Rational(5));
  EXPECT_EQ(right.face.points, (std::vector<Point2>{{5, 7}}));
  EXPECT_TRUE(right.face.rays.empty());
  EXPECT_FALSE(a.support(Direction2(-1, 0)).finite());
  const auto boundary = a.support(Direction2(1, 1));
  EXPECT_EQ(boundary.face.rays.size(), 1u);
}

TEST(Support, MatchesBruteForceAndSeesRaysOnBoundary) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const Cone2 v = trial % 3 == 0 ? Cone2::trivial() : (trial % 3 == 1 ? wedge(rng) : Cone2::ray(direction2(rng, 4)));
    const auto inst = random_instance(rng, v);
    for (int k = 0; k < 20; ++k) {
      const Direction2 u = direction2(rng, 9);
      const auto s = inst.set.support(u);
      const auto expected = brute_support(inst.points, v, u.vec());
      ASSERT_EQ(s.finite(), expected.has_value());
      if (expected) ASSERT_EQ(*s.value, *expected);
    }
    for (const auto& g : v.generators()) {
      for (const Direction2& u : {rot90(g), rot_cw(g)}) {
        const auto s = inst.set.support(u);
        if (!s.finite()) continue;
        ASSERT_FALSE(s.face.rays.empty());
        for (const auto& [start, dir] : s.face.rays) ASSERT_EQ(dot(u, start), *s.value);
      }
    }
  }
}

TEST(Contains, AgreesWithHalfspaceOracle) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Cone2 v = trial % 3 == 0 ? Cone2::trivial() : (trial % 3 == 1 ? wedge(rng) : Cone2::ray(direction2(rng, 3)));
    const auto inst = random_instance(rng, v, 5);
    for (int k = 0; k < 20; ++k) {
      const Point2 x = k < 5 ? inst.points[static_cast<std::size_t>(k) % inst.points.size()]
                             : point2(rng, -12, 12, 2);
      ASSERT_EQ(inst.set.contains(x), brute_contains(inst.points, v, x)) << trial << " " << x;
    }
  }
}

TEST(MinkowskiSum, NeutralElementAndSegments) {
  const VPolygon a = poly({{0, 0}, {3, 1}, {1, 4}}, kLeftWedge);
  EXPECT_EQ(minkowski_sum(a, VPolygon::cone_at(kLeftWedge)), a);
  const VPolygon seg = poly({{0, 0}, {2, 0}});
  EXPECT_EQ(minkowski_sum(seg, seg), poly({{0, 0}, {4, 0}}));
  try {
    minkowski_sum(a, seg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "incompatible recession cones");
  }
}

TEST(MinkowskiSum, EqualsHullOfPairwiseSums) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point2> p, r;
    for (int i = 0; i < 3; ++i) p.push_back(point2(rng, -5, 5));
    for (int i = 0; i < 3; ++i) r.push_back(point2(rng, -5, 5));
    std::vector<Point2> sums;
    for (const auto& x : p) {
      for (const auto& y : r) sums.push_back(x + y);
    }
    const VPolygon s = minkowski_sum(poly(p), poly(r));
    // Oracle: edges of the brute hull of all pairwise sums.
    auto edges = brute_hull_edges(sums);
    EdgeMeasure expected;
    if (edges.size() >= 2) {
      for (const auto& [a, b] : edges) {
        const auto [u, lambda] = edge_normal(b - a);
        expected.add(u, lambda);
      }
    }
    ASSERT_EQ(s.measure(), expected);
    for (const auto& x : sums) ASSERT_TRUE(s.contains(x));
  }
}

TEST(Scale, Examples) {
  const VPolygon a = poly({{0, 0}, {3, 1}, {1, 4}}, kLeftWedge);
  EXPECT_EQ(scale(a, 1), a);
  EXPECT_EQ(scale(a, 0), VPolygon::cone_at(kLeftWedge));
  EXPECT_EQ(scale(poly({{0, 0}, {2, 0}}), q("3/2")), poly({{0, 0}, {3, 0}}));
  EXPECT_THROW(scale(a, -1), Error);
}

TEST(MeasureInf, Examples) {
  const EdgeMeasure m = measure({{Direction2(0, -1), 2}, {Direction2(1, 1), 1}});
  EXPECT_EQ(measure_inf(m, m), m);
  EXPECT_TRUE(measure_inf(m, measure({{Direction2(0, 1), 5}})).empty());
  EXPECT_EQ(measure_inf(m, measure({{Direction2(0, -1), 3}})), measure({{Direction2(0, -1), 2}}));
}

TEST(Translate, RoundTrip) {
  const VPolygon a = poly({{0, 0}, {2, 0}, {1, 1}});
  const Point2 v{q("3/7"), -2};
  EXPECT_EQ(translate(a, {}), a);
  EXPECT_EQ(translate(translate(a, v), -v), a);
  const VPolygon b = poly({{0, 0}, {2, 0}});
  const Point2 p1{1, -2};
  EXPECT_EQ(translate(b, -p1), poly({{-1, 2}, {1, 2}}));
}

TEST(RoundTrip, VerticesRegenerateTheSet) {
  Rng rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Cone2 v = trial % 2 ? wedge(rng) : Cone2::trivial();
    const auto inst = random_instance(rng, v);
    ASSERT_EQ(VPolygon::from_points(inst.set.chain(), v), inst.set);
  }
}

TEST(Additivity, MeasuresAndSupportsAdd) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Cone2 v = wedge(rng);
    const auto a = random_instance(rng, v);
    const auto b = random_instance(rng, v);
    const VPolygon s = minkowski_sum(a.set, b.set);
    ASSERT_EQ(s.measure(), a.set.measure() + b.set.measure());
    for (const auto& u : random_admissible(rng, v, 20)) {
      ASSERT_EQ(*s.support(u).value, *a.set.support(u).value + *b.set.support(u).value);
    }
    const Direction2 w = direction2(rng, 9);
    ASSERT_EQ(s.support(w).finite(), v.in_polar(w));
  }
}

TEST(OrderCancellation, InclusionOfSumsCancels) {
  Rng rng(3);
  int inclusions = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Cone2 v = trial % 2 ? wedge(rng) : Cone2::trivial();
    const auto a = random_instance(rng, v, 3);
    const auto b = random_instance(rng, v, 4);
    // Make inclusion likely by building C from A plus a random summand.
    const VPolygon c = trial % 3 ? minkowski_sum(a.set, poly(points2(rng, 3, 2), v)) : random_instance(rng, v, 4).set;
    if (!is_subset(minkowski_sum(a.set, b.set), minkowski_sum(b.set, c))) continue;
    ++inclusions;
    ASSERT_TRUE(is_subset(a.set, c)) << trial;
  }
  EXPECT_GT(inclusions, 100);
}

TEST(ReducePair, PairWithItselfCollapsesToTheCone) {
  const VPolygon a = poly({{0, 0}, {3, 1}, {1, 4}}, kLeftWedge);
  const auto r = reduce_pair(a, a);
  EXPECT_EQ(r.first, VPolygon::cone_at(kLeftWedge));
  EXPECT_EQ(r.second, VPolygon::cone_at(kLeftWedge));
}

TEST(ReducePair, BoundedPairsAreRejected) {
  const VPolygon a = poly({{0, 0}, {2, 0}, {1, 1}});
  EXPECT_THROW(reduce_pair(a, a), Error);
  EXPECT_THROW(is_zero_minimal(a, a), Error);
}

TEST(ReducePair, RemovesACommonSummand) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Cone2 v = Cone2::wedge(Direction2(-1, -1), Direction2(-1, 1));
    auto a0 = random_instance(rng, v).set;
    auto b0 = random_instance(rng, v).set;
    // Disjoint supports: keep only B0 edges not used by A0.
    if (!measure_inf(a0.measure(), b0.measure()).empty()) continue;
    const VPolygon m = random_instance(rng, v).set;
    const auto r = reduce_pair(minkowski_sum(a0, m), minkowski_sum(b0, m));
    ASSERT_TRUE(are_equivalent(r.first, r.second, a0, b0));
    ASSERT_TRUE(is_zero_minimal(r.first, r.second));
    ASSERT_EQ(r.first.measure(), a0.measure());
    ASSERT_EQ(r.second.measure(), b0.measure());
  }
}

TEST(IsZeroMinimal, Examples) {
  const VPolygon a = poly({{1, 0}}, kUp);
  const VPolygon b = poly({{0, 0}, {2, 0}}, kUp);
  EXPECT_TRUE(is_zero_minimal(a, b));
  const Point2 up{0, 1};
  EXPECT_FALSE(is_zero_minimal(translate(a, up), translate(b, up)));
  const VPolygon c = poly({{0, 0}, {3, 1}, {1, 4}}, kLeftWedge);
  EXPECT_FALSE(is_zero_minimal(c, c));
}

TEST(IsMinimalBounded, Examples) {
  const VPolygon a = poly({{0, 0}, {2, 0}, {1, 1}});
  const VPolygon b = poly({{0, 0}, {2, 0}});
  EXPECT_TRUE(is_minimal_bounded(a, b));
  EXPECT_EQ(common_normals(a, b), (std::vector<Direction2>{Direction2(0, -1)}));
  const VPolygon square = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_FALSE(is_minimal_bounded(square, square));
  EXPECT_TRUE(is_minimal_bounded(a, poly({{4, 4}})));
  EXPECT_THROW(is_minimal_bounded(poly({{0, 0}}, kUp), poly({{0, 0}}, kUp)), Error);
}

TEST(IsSummand, Examples) {
  const VPolygon a = poly({{0, 0}, {2, 0}, {1, 1}});
  const VPolygon b = poly({{0, 0}, {2, 0}});
  const auto self = is_summand(a, a);
  ASSERT_TRUE(self.is_summand);
  EXPECT_EQ(*self.complement, VPolygon::cone_at(Cone2::trivial()));
  const auto sum = is_summand(b, minkowski_sum(a, b));
  ASSERT_TRUE(sum.is_summand);
  EXPECT_EQ(*sum.complement, a);
  EXPECT_FALSE(is_summand(b, a).is_summand);
}

TEST(IsSummand, SegmentIsNotASummandOfTheTriangleByExhaustiveSearch) {
  // Every summand C of a triangle has edges parallel to the triangle's; search
  // all measures with coefficients in {0, 1/2, ..., 3} on those normals and
  // all anchors on a half-integer grid.
  const VPolygon a = poly({{0, 0}, {2, 0}, {1, 1}});
  const VPolygon b = poly({{0, 0}, {2, 0}});
  const std::vector<Direction2> normals = {Direction2(0, -1), Direction2(1, 1), Direction2(-1, 1),
                                           Direction2(0, 1), Direction2(-1, -1), Direction2(1, -1)};
  int candidates = 0;
  for (int mask = 0; mask < 7 * 7 * 7; ++mask) {
    EdgeMeasure m;
    int code = mask;
    for (int i = 0; i < 3; ++i) {
      const int c = code % 7;
      code /= 7;
      if (c) m.add(normals[static_cast<std::size_t>(i)], Rational(Integer(c), Integer(2)));
    }
    if (m.edge_sum() != Point2{}) continue;
    for (int x = -4; x <= 4; ++x) {
      for (int y = -4; y <= 4; ++y) {
        ++candidates;
        const VPolygon c(Cone2::trivial(), Point2{Rational(Integer(x), Integer(2)), Rational(Integer(y), Integer(2))}, m);
        ASSERT_NE(minkowski_sum(b, c), a);
      }
    }
  }
  EXPECT_GT(candidates, 0);
}

TEST(PolygonSummandCheck, Examples) {
  const VPolygon k = poly({{0, 0}, {4, 0}, {1, 3}}, kUp);
  EXPECT_TRUE(polygon_summand_check(poly({{9, 9}}), k));
  EXPECT_TRUE(polygon_summand_check(poly({{0, 0}, {3, 0}}), k));
  const VPolygon tri = poly({{0, 0}, {2, 0}, {0, 2}});
  EXPECT_FALSE(polygon_summand_check(poly({{0, 0}, {3, 0}}), tri));
}

TEST(PolygonSummandCheck, AgreesWithIsSummand) {
  Rng rng(9);
  int positives = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Cone2 v = trial % 4 == 0 ? Cone2::trivial() : (trial % 4 == 1 ? Cone2::ray(direction2(rng, 3)) : wedge(rng));
    const auto p = random_instance(rng, Cone2::trivial(), 4).set;
    VPolygon k = random_instance(rng, v, 6).set;
    if (trial % 2) k = minkowski_sum(VPolygon::from_points(p.chain(), v), k);
    const bool expected = is_summand(VPolygon::from_points(p.chain(), v), k).is_summand;
    positives += expected;
    ASSERT_EQ(polygon_summand_check(p, k), expected) << trial;
  }
  EXPECT_GT(positives, 400);
}

TEST(Kernel, BottomEdgeExample) {
  const VPolygon a = poly({{1, 0}}, kUp);
  const VPolygon b = poly({{0, 0}, {2, 0}}, kUp);
  EXPECT_EQ(kernel_of_minimality(a, b), (std::vector<Point2>{{0, 0}, {2, 0}}));
  const VPolygon pt = poly({{0, 0}}, kLeftWedge);
  EXPECT_EQ(kernel_of_minimality(pt, pt), (std::vector<Point2>{{0, 0}}));
  try {
    kernel_of_minimality(translate(a, {0, 1}), translate(b, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "kernel defined only relative to 0-minimal pairs");
  }
}

TEST(Kernel, MatchesTheTranslateCharacterization) {
  // x is in the kernel iff B meets x - V only at x. Check with the halfspace
  // oracle along several cone directions at points of the boundary.
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Cone2 v = trial % 2 ? wedge(rng) : Cone2::ray(direction2(rng, 3));
    auto bi = random_instance(rng, v, 6);
    const auto r = reduce_pair(random_instance(rng, v).set, bi.set);
    const auto chain = kernel_of_minimality(r.first, r.second);
    std::vector<Point2> pts = r.second.chain();
    std::vector<Point2> cone_dirs;
    const auto& g = v.generators();
    for (long s = 0; s <= 3; ++s) {
      for (long t = 0; t <= 3; ++t) {
        if (s == 0 && t == 0) continue;
        cone_dirs.push_back(Rational(s) * g.front().vec() + Rational(t) * g.back().vec());
      }
    }
    const Rational eps(Integer(1), Integer(1000));
    std::vector<Point2> samples;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      for (int k = 0; k <= 4; ++k) {
        samples.push_back(chain[i] + Rational(Integer(k), Integer(4)) * (chain[i + 1] - chain[i]));
      }
    }
    samples.push_back(chain.front());
    for (const auto& x : samples) {
      ASSERT_TRUE(on_chain(chain, x));
      for (const auto& c : cone_dirs) ASSERT_FALSE(brute_contains(pts, v, x - eps * c));
    }
    // Boundary points on the recession rays are not in the kernel.
    for (const auto& [start, dir] : r.second.support(rot_cw(v.exit_generator())).face.rays) {
      const Point2 x = start + Rational(3) * dir.vec();
      ASSERT_FALSE(on_chain(chain, x));
      ASSERT_TRUE(brute_contains(pts, v, x - eps * dir.vec()));
    }
  }
}

TEST(Kernel, ChainIsAUnionOfWholeFaces) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Cone2 v = wedge(rng);
    const auto r = reduce_pair(random_instance(rng, v).set, random_instance(rng, v).set);
    const auto chain = kernel_of_minimality(r.first, r.second);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const auto [u, lambda] = edge_normal(chain[i + 1] - chain[i]);
      ASSERT_TRUE(in_polar_interior(u, v));
      std::vector<Point2> edge = {chain[i], chain[i + 1]};
      std::sort(edge.begin(), edge.end());
      ASSERT_EQ(r.second.support(u).face.points, edge);
    }
  }
}

TEST(Kernel, IteratedSupportSetsStayInTheKernel) {
  Rng rng(14);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Cone2 v = wedge(rng);
    auto a = random_instance(rng, v).set;
    auto b = random_instance(rng, v).set;
    if (!measure_inf(a.measure(), b.measure()).empty()) continue;
    a = translate(a, -a.chain()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(a.chain().size()) - 1))]);
    b = translate(b, -b.chain()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(b.chain().size()) - 1))]);
    ASSERT_TRUE(is_zero_minimal(a, b));
    ASSERT_TRUE(is_zero_minimal(b, a));
    const auto kernel_a = kernel_of_minimality(b, a);
    const auto kernel_b = kernel_of_minimality(a, b);
    for (const auto& u1 : random_admissible(rng, v, 10)) {
      const auto bf = b.support(u1).face.points;
      if (!std::all_of(bf.begin(), bf.end(), [&](const Point2& x) { return on_chain(kernel_b, x); })) continue;
      const auto af = a.support(u1).face.points;
      // second-level support inside the first face
      const Direction2 u2 = direction2(rng, 5);
      Rational best = dot(u2, af.front());
      for (const auto& x : af) best = max(best, dot(u2, x));
      for (const auto& x : af) {
        if (dot(u2, x) == best) {
          ASSERT_TRUE(on_chain(kernel_a, x));
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(AreEquivalent, Examples) {
  Rng rng(15);
  const Cone2 v = wedge(rng);
  const auto a = random_instance(rng, v).set;
  const auto b = random_instance(rng, v).set;
  const auto m = random_instance(rng, v).set;
  EXPECT_TRUE(are_equivalent(a, b, a, b));
  EXPECT_TRUE(are_equivalent(a, b, minkowski_sum(a, m), minkowski_sum(b, m)));
  const VPolygon ta = poly({{0, 0}, {2, 0}, {1, 1}});
  const VPolygon tb = poly({{0, 0}, {2, 0}});
  const VPolygon a1 = poly({{-1, 2}, {1, 2}, {0, 3}, {0, 0}});
  const VPolygon b1 = poly({{-1, 2}, {1, 2}, {0, 0}});
  EXPECT_TRUE(are_equivalent(a1, b1, ta, tb));
  EXPECT_FALSE(are_equivalent(ta, tb, tb, ta));
}
