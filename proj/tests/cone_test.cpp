#include <gtest/gtest.h>

#include <random>

#include "gfan/cone.hpp"

using namespace gfan;

namespace {

using Rows = std::vector<QVector>;

// Exact feasibility of lambda >= 0, G lambda = v: the equalities are solved
// first, then the free multipliers are removed by Fourier-Motzkin
// elimination. Independent of the double description code.
bool fm_contains(const std::vector<QVector>& gens, const QVector& v) {
  const std::size_t m = gens.size(), n = v.size();
  Rows eq(n, QVector(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) eq[i][j] = gens[j][i];
    eq[i][m] = v[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && eq[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(eq[p], eq[r]);
    Rational inv = 1 / eq[r][c];
    for (auto& x : eq[r]) x *= inv;
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && eq[i][c] != 0) {
        Rational f = eq[i][c];
        for (std::size_t k = 0; k <= m; ++k) eq[i][k] -= f * eq[r][k];
      }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (eq[i][m] != 0) return false;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.push_back(j);
  const std::size_t k = free.size();
  // Inequalities a . x <= b over the free multipliers, stored as (a, b).
  Rows ineq;
  for (std::size_t f = 0; f < k; ++f) {
    QVector a(k + 1, 0);
    a[f] = -1;
    ineq.push_back(a);
  }
  for (std::size_t i = 0; i < r; ++i) {
    QVector a(k + 1);
    for (std::size_t f = 0; f < k; ++f) a[f] = eq[i][free[f]];
    a[k] = eq[i][m];
    ineq.push_back(a);
  }
  for (std::size_t j = 0; j < k; ++j) {
    Rows pos, neg, rest;
    for (auto& row : ineq) (row[j] > 0 ? pos : row[j] < 0 ? neg : rest).push_back(row);
    for (const auto& p : pos)
      for (const auto& q : neg) {
        QVector c(k + 1);
        for (std::size_t t = 0; t <= k; ++t) c[t] = p[t] / p[j] - q[t] / q[j];
        rest.push_back(c);
      }
    ineq = std::move(rest);
  }
  return std::all_of(ineq.begin(), ineq.end(), [&](const QVector& row) { return row[k] >= 0; });
}

QVector random_vector(std::mt19937_64& rng, std::size_t n, int range) {
  QVector v(n);
  for (auto& x : v) x = static_cast<int>(rng() % (2 * range + 1)) - range;
  return v;
}

std::vector<QVector> random_generators(std::mt19937_64& rng, std::size_t n, std::size_t max_count) {
  std::vector<QVector> g(1 + rng() % max_count);
  for (auto& v : g) v = random_vector(rng, n, 3);
  return g;
}

QVector q(std::initializer_list<int> xs) { return QVector(xs.begin(), xs.end()); }

}  // namespace

TEST(Cone, InteriorGeneratorIsNotARay) {
  auto c = cone_from_generators({{1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(c.rays(), (std::vector<QVector>{q({0, 1}), q({1, 0})}));
  EXPECT_EQ(c.span_dim(), 2u);
  EXPECT_TRUE(is_simplicial(c));
}

TEST(Cone, CoordinatePlaneInThreeSpace) {
  auto c = cone_from_generators({{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(span_dimension(c), 2u);
  EXPECT_TRUE(is_simplicial(c));
  EXPECT_FALSE(c.contains(q({1, 1, 1})));
  EXPECT_TRUE(c.in_relative_interior(q({1, 2, 0})));
}

TEST(Cone, RaysArePrimitive) {
  auto c = cone_from_generators({{2, 4}, {3, 0}});
  EXPECT_EQ(c.rays(), (std::vector<QVector>{q({1, 0}), q({1, 2})}));
  std::vector<QVector> g{{Rational(1, 2), Rational(1, 3)}};
  EXPECT_EQ(cone_from_generators(2, g).rays(), (std::vector<QVector>{q({3, 2})}));
}

TEST(Cone, ZeroCone) {
  auto z = cone_from_generators(3, {});
  EXPECT_EQ(z.span_dim(), 0u);
  EXPECT_TRUE(z.contains(q({0, 0, 0})));
  EXPECT_TRUE(z.in_relative_interior(q({0, 0, 0})));
  EXPECT_FALSE(z.contains(q({1, 0, 0})));
  auto c = cone_from_generators({{1, 0}, {0, 1}});
  EXPECT_TRUE(c.contains(q({0, 0})));
  EXPECT_FALSE(c.in_relative_interior(q({0, 0})));
}

TEST(Cone, QuadrantMembership) {
  auto c = cone_from_generators({{1, 0}, {0, 1}});
  EXPECT_TRUE(c.in_relative_interior(q({1, 1})));
  EXPECT_TRUE(c.contains(q({1, 0})));
  EXPECT_FALSE(c.in_relative_interior(q({1, 0})));
  EXPECT_FALSE(c.contains(q({-1, 0})));
}

TEST(Cone, EqualityByMutualContainment) {
  EXPECT_TRUE(equal_cones(cone_from_generators({{1, 0}, {0, 1}}), cone_from_generators({{1, 0}, {1, 1}, {0, 1}})));
  EXPECT_FALSE(equal_cones(cone_from_generators({{1, 0}, {0, 1}}), cone_from_generators({{1, 0}, {-1, 1}})));
}

TEST(Cone, WholePlane) {
  auto c = cone_from_generators({{1, 0}, {0, 1}, {-1, -1}});
  EXPECT_FALSE(is_simplicial(c));
  EXPECT_FALSE(c.is_pointed());
  EXPECT_EQ(c.span_dim(), 2u);
  EXPECT_TRUE(c.facets().empty());
  EXPECT_EQ(c.rays().size(), 4u);
  EXPECT_TRUE(equal_cones(c, cone_from_generators({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})));
  EXPECT_TRUE(boundary_faces(c).empty());
}

TEST(Cone, HalfPlane) {
  auto c = cone_from_generators({{1, 0}, {-1, 0}, {0, 1}});
  EXPECT_EQ(c.facets(), (std::vector<QVector>{q({0, 1})}));
  EXPECT_EQ(c.lineality().size(), 1u);
  EXPECT_TRUE(c.in_relative_interior(q({-5, 1})));
  auto faces = boundary_faces(c);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].span_dim(), 1u);
}

TEST(Cone, QuadrantFaces) {
  auto faces = boundary_faces(cone_from_generators({{1, 0}, {0, 1}}));
  ASSERT_EQ(faces.size(), 3u);
  EXPECT_EQ(faces[0].span_dim(), 0u);
  EXPECT_EQ(faces[1].span_dim(), 1u);
  EXPECT_EQ(faces[2].span_dim(), 1u);
}

TEST(Cone, SimplexFaceLattice) {
  auto faces = boundary_faces(cone_from_generators({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
  std::vector<int> by_dim(3, 0);
  for (const auto& f : faces) ++by_dim[f.span_dim()];
  EXPECT_EQ(by_dim, (std::vector<int>{1, 3, 3}));
}

TEST(Cone, SquarePyramidFaceLattice) {
  auto c = cone_from_generators({{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}});
  EXPECT_EQ(c.rays().size(), 4u);
  EXPECT_EQ(c.facets().size(), 4u);
  EXPECT_FALSE(is_simplicial(c));
  EXPECT_EQ(boundary_faces(c).size(), 9u);
}

TEST(Cone, OwnGeneratorsSatisfyFacetSystem) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto gens = random_generators(rng, 4, 7);
    auto c = cone_from_generators(4, gens);
    for (const auto& g : gens) {
      EXPECT_TRUE(c.contains(g));
      EXPECT_TRUE(fm_contains(gens, g));
    }
    for (const auto& r : c.rays()) EXPECT_TRUE(fm_contains(gens, r));
  }
}

TEST(Cone, MembershipMatchesEliminationOracle) {
  std::mt19937_64 rng(2);
  int inside = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + rng() % 3;
    auto gens = random_generators(rng, n, 5);
    auto c = cone_from_generators(n, gens);
    auto v = random_vector(rng, n, 4);
    bool expected = fm_contains(gens, v);
    inside += expected;
    ASSERT_EQ(c.contains(v), expected) << "trial " << trial << " point " << format_vector(v);
  }
  EXPECT_GT(inside, 50);
}

TEST(Cone, BatchMembershipMatchesSingle) {
  std::mt19937_64 rng(3);
  auto c = cone_from_generators(3, random_generators(rng, 3, 6));
  std::vector<QVector> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(random_vector(rng, 3, 3));
  auto batch = contains_all(c, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(batch[i], c.contains(pts[i]));
  EXPECT_EQ(batch, contains_all_serial(c, pts));
}

TEST(Cone, IndependentVectorsGiveSimplicialCones) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = 1 + rng() % 4;
    std::vector<QVector> gens;
    while (gens.size() < k) {
      auto v = random_vector(rng, 4, 3);
      auto trialc = cone_from_generators(4, gens);
      if (!trialc.in_span(v)) gens.push_back(v);
    }
    auto c = cone_from_generators(4, gens);
    EXPECT_TRUE(is_simplicial(c));
    EXPECT_EQ(c.span_dim(), k);
  }
}

TEST(Cone, RoundTripThroughFacets) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = cone_from_generators(3, random_generators(rng, 3, 6));
    auto again = cone_from_generators(3, c.rays());
    EXPECT_TRUE(equal_cones(c, again));
    EXPECT_EQ(again.facets(), c.facets());
  }
}

TEST(Cone, SegmentFromInteriorStaysInterior) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = cone_from_generators(3, random_generators(rng, 3, 6));
    QVector eta(3, 0);
    for (const auto& r : c.rays())
      for (int i = 0; i < 3; ++i) eta[i] += r[i];
    if (!c.in_relative_interior(eta)) continue;
    const auto& r = c.rays()[rng() % c.rays().size()];
    QVector gamma = r;
    for (int s = 1; s < 100; ++s) {
      Rational t(s, 100);
      QVector p(3);
      for (int i = 0; i < 3; ++i) p[i] = t * eta[i] + (1 - t) * gamma[i];
      EXPECT_TRUE(c.in_relative_interior(p));
      if (c.is_pointed() && c.span_dim() > 1) {
        // Past a boundary point, moving away from the interior leaves the cone.
        QVector exit(3);
        for (int i = 0; i < 3; ++i) exit[i] = gamma[i] + t * (gamma[i] - eta[i]);
        EXPECT_FALSE(c.contains(exit));
      }
    }
  }
}

TEST(Cone, BoundaryPointsLieInExactlyOneFace) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = cone_from_generators(3, random_generators(rng, 3, 6));
    auto faces = boundary_faces(c);
    for (const auto& f : c.facets()) {
      std::vector<QVector> on;
      for (const auto& r : c.rays())
        if (dot(f, r) == 0) on.push_back(r);
      for (int s = 0; s < 5; ++s) {
        QVector p(3, 0);
        for (const auto& r : on) {
          Rational w = static_cast<int>(rng() % 3);
          for (int i = 0; i < 3; ++i) p[i] += w * r[i];
        }
        int hits = 0;
        for (const auto& face : faces) hits += face.in_relative_interior(p);
        EXPECT_EQ(hits, 1) << format_vector(p);
      }
    }
  }
}

TEST(Cone, IntersectionOfQuadrants) {
  auto a = cone_from_generators({{1, 0}, {0, 1}});
  auto b = cone_from_generators({{1, 0}, {0, -1}});
  auto c = intersect(a, b);
  EXPECT_EQ(c.rays(), (std::vector<QVector>{q({1, 0})}));
  EXPECT_EQ(intersect(a, a).span_dim(), 2u);
  EXPECT_EQ(intersect(a, cone_from_generators({{-1, -1}})).span_dim(), 0u);
}

TEST(Cone, IntersectionMatchesMembership) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = cone_from_generators(3, random_generators(rng, 3, 5));
    auto b = cone_from_generators(3, random_generators(rng, 3, 5));
    auto c = intersect(a, b);
    for (int k = 0; k < 30; ++k) {
      auto v = random_vector(rng, 3, 3);
      EXPECT_EQ(c.contains(v), a.contains(v) && b.contains(v));
    }
  }
}
