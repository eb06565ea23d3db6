#include <gtest/gtest.h>

#include <random>

#include "gfan/decompose.hpp"
#include "gfan/error.hpp"
#include "gfan/presentation.hpp"
#include "test_support.hpp"

using namespace gfan;
using gfan::testing::builtin;
using gfan::testing::random_lambda;
using gfan::testing::random_vertices;

namespace {

std::vector<GVector> split(const Algebra& alg, const TwoTermPresentation& p, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  return summand_g_vectors(alg, decompose_presentation(alg, p, rng));
}

TwoTermPresentation random_presentation(const Algebra& alg, std::mt19937_64& rng, std::size_t max_count) {
  auto minus = random_vertices(alg, max_count, rng);
  auto plus = random_vertices(alg, max_count, rng);
  return {minus, plus, random_lambda(alg, plus, minus, rng)};
}

// Same complex after a random change of basis on both terms.
TwoTermPresentation disguise(const Algebra& alg, const TwoTermPresentation& p, std::mt19937_64& rng) {
  auto u = random_lambda(alg, p.plus, p.plus, rng);
  auto v = random_lambda(alg, p.minus, p.minus, rng);
  return {p.minus, p.plus, lambda_multiply(alg, u, lambda_multiply(alg, p.map, v))};
}

std::vector<GVector> sorted(std::vector<GVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Decompose, A2GenericPresentations) {
  auto alg = builtin("a2");
  EXPECT_EQ(split(alg, sample_presentation(alg, {1, -1}, 1)), (std::vector<GVector>{{1, -1}}));
  EXPECT_EQ(split(alg, sample_presentation(alg, {1, -2}, 2)), sorted({{1, -1}, {0, -1}}));
  EXPECT_EQ(split(alg, sample_presentation(alg, {2, -1}, 3)), sorted({{1, 0}, {1, -1}}));
  EXPECT_EQ(split(alg, sample_presentation(alg, {-1, 1}, 4)), sorted({{-1, 0}, {0, 1}}));
}

TEST(Decompose, ZeroMapSplitsIntoShifts) {
  auto alg = builtin("cycle3");
  auto p = zero_presentation(alg, {0}, {2});
  EXPECT_EQ(split(alg, p), sorted({{-1, 0, 0}, {0, 0, 1}}));
}

TEST(Decompose, ContractiblePartVanishes) {
  auto alg = builtin("a3");
  auto p = lambda_identity(alg, {1});
  TwoTermPresentation c{{1}, {1}, p};
  EXPECT_TRUE(split(alg, c).empty());
}

TEST(Decompose, KroneckerPencilHasUnitResidueDegree) {
  auto alg = builtin("kronecker2");
  std::mt19937_64 rng(11);
  auto pieces = decompose_presentation(alg, sample_presentation(alg, {1, -1}, 5), rng);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces[0].residue_degree, 1);
}

TEST(Decompose, KroneckerTwoByTwoCountsClosureSummands) {
  auto alg = builtin("kronecker2");
  for (std::uint64_t s = 0; s < 10; ++s)
    EXPECT_EQ(split(alg, sample_presentation(alg, {2, -2}, s), s), (std::vector<GVector>{{1, -1}, {1, -1}}));
}

TEST(Decompose, DisguisedSumsRecoverSummands) {
  for (const char* name : {"a3", "cycle3", "kronecker2"}) {
    auto alg = builtin(name);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_presentation(alg, rng, 2);
      auto b = random_presentation(alg, rng, 2);
      auto expected = split(alg, a);
      auto rest = split(alg, b);
      expected.insert(expected.end(), rest.begin(), rest.end());
      auto mixed = disguise(alg, direct_sum(alg, a, b), rng);
      EXPECT_EQ(split(alg, mixed), sorted(expected)) << name << " trial " << trial;
    }
  }
}

TEST(Decompose, GVectorsSumToTotal) {
  auto alg = builtin("cycle3");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_presentation(alg, rng, 3);
    auto total = p.g_vector(3);
    GVector sum(3, 0);
    for (const auto& g : split(alg, p, trial))
      for (int i = 0; i < 3; ++i) sum[i] += g[i];
    EXPECT_EQ(sum, total);
  }
}

TEST(Decompose, RestrictToFirstSummand) {
  auto alg = builtin("a3");
  std::mt19937_64 rng(3);
  auto a = sample_presentation(alg, {1, -1, 0}, 1);
  auto b = sample_presentation(alg, {0, 1, -1}, 2);
  auto s = direct_sum(alg, a, b);
  auto p1 = projective_sum(alg, s.minus);
  auto p0 = projective_sum(alg, s.plus);
  // Coordinates of the first summand come first at each vertex.
  auto leading = [&](const Representation& whole, const std::vector<int>& part) {
    auto sub = projective_sum(alg, part);
    Subspaces out(alg.vertex_count());
    for (int w = 0; w < alg.vertex_count(); ++w) {
      out[w] = Matrix(whole.dims[w], sub.dims[w]);
      for (std::size_t k = 0; k < sub.dims[w]; ++k) out[w](k, k) = 1;
    }
    return out;
  };
  auto r = restrict_to_subcomplex(alg, s, leading(p1, a.minus), leading(p0, a.plus));
  EXPECT_EQ(r.g_vector(3), a.g_vector(3));
  EXPECT_EQ(homotopy_hom_dim(alg, r, a), 1u);
  EXPECT_EQ(homotopy_hom_dim(alg, a, r), 1u);
}

TEST(EInvariant, StalkInDegreeZeroHasNoExtensions) {
  auto alg = builtin("cycle3");
  auto p = zero_presentation(alg, {}, {0, 1});
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) EXPECT_EQ(e_invariant(alg, p, random_presentation(alg, rng, 3)), 0u);
}

TEST(EInvariant, A2SimpleIsRigid) {
  auto alg = builtin("a2");
  auto p = sample_presentation(alg, {1, -1}, 3);
  EXPECT_EQ(e_invariant(alg, p, p), 0u);
  EXPECT_EQ(homotopy_hom_dim(alg, p, p), 1u);
}

TEST(EInvariant, ShiftedProjectiveAgainstProjective) {
  // e(P_j[1], P_i) = dim Hom(P_j, P_i).
  auto alg = builtin("cycle3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto shifted = zero_presentation(alg, {j}, {});
      auto stalk = zero_presentation(alg, {}, {i});
      EXPECT_EQ(e_invariant(alg, shifted, stalk), alg.paths(i, j).size());
      EXPECT_EQ(e_invariant(alg, stalk, shifted), 0u);
      EXPECT_EQ(homotopy_hom_dim(alg, stalk, stalk), alg.paths(i, i).size());
    }
}

TEST(EInvariant, AdditiveInBothArguments) {
  auto alg = builtin("cycle3");
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_presentation(alg, rng, 2);
    auto b = random_presentation(alg, rng, 2);
    auto c = random_presentation(alg, rng, 2);
    EXPECT_EQ(e_invariant(alg, direct_sum(alg, a, b), c), e_invariant(alg, a, c) + e_invariant(alg, b, c));
    EXPECT_EQ(e_invariant(alg, c, direct_sum(alg, a, b)), e_invariant(alg, c, a) + e_invariant(alg, c, b));
  }
}

TEST(Engine, SamplesAreDeterministic) {
  auto alg = builtin("cycle3");
  EXPECT_EQ(sample_presentation(alg, {1, -1, 2}, 4).map, sample_presentation(alg, {1, -1, 2}, 4).map);
  EXPECT_NE(derive_seed(1, {1, 0, 0}, 0), derive_seed(1, {0, 1, 0}, 0));
}

TEST(Engine, GenericDecompositionExamples) {
  auto alg = builtin("a2");
  auto d = generic_decomposition(alg, {1, -2});
  EXPECT_TRUE(d.consensus);
  EXPECT_EQ(d.summands, (GMultiset{{{0, -1}, 1}, {{1, -1}, 1}}));
  auto k = builtin("kronecker2");
  EXPECT_EQ(generic_decomposition(k, {3, -3}).summands, (GMultiset{{{1, -1}, 3}}));
  EXPECT_EQ(generic_decomposition(k, {2, -1}).summands, (GMultiset{{{2, -1}, 1}}));
  EXPECT_TRUE(generic_decomposition(k, {0, 0}).summands.empty());
}

TEST(Engine, TamenessOfSmallAlgebras) {
  auto k2 = builtin("kronecker2");
  EXPECT_TRUE(is_tame(k2, {1, -1}));
  EXPECT_TRUE(is_tame(k2, {2, -1}));
  auto c = builtin("cycle3");
  EXPECT_TRUE(is_tame(c, {1, 1, -1}));
  auto k3 = builtin("kronecker3");
  EXPECT_FALSE(is_tame(k3, {1, -1}));
}

TEST(Engine, RejectsBadInput) {
  auto alg = builtin("a2");
  EXPECT_THROW(generic_decomposition(alg, {1, 2, 3}), Error);
  EXPECT_THROW(parse_g("1,x"), Error);
  EXPECT_EQ(parse_g("1,-2,0"), (GVector{1, -2, 0}));
}
