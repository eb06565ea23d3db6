#include <gtest/gtest.h>

#include <functional>

#include "gfan/error.hpp"
#include "test_support.hpp"

using namespace gfan;
using gfan::testing::builtin;

namespace {

// Counts paths of length < bound from each vertex that avoid every word in
// `forbidden`, by plain enumeration.
std::size_t count_monomial_paths(const Quiver& q, const std::vector<std::vector<int>>& forbidden, int bound) {
  std::size_t count = 0;
  std::function<void(int, std::vector<int>&)> walk = [&](int v, std::vector<int>& w) {
    for (const auto& bad : forbidden)
      if (w.size() >= bad.size() && std::equal(bad.begin(), bad.end(), w.end() - bad.size())) return;
    ++count;
    if (static_cast<int>(w.size()) >= bound) return;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
      if (q.arrows[a].source != v) continue;
      w.push_back(a);
      walk(q.arrows[a].target, w);
      w.pop_back();
    }
  };
  for (int v = 0; v < q.vertex_count; ++v) {
    std::vector<int> w;
    walk(v, w);
  }
  return count;
}

Element add(const Algebra& alg, const Element& x, const Element& y) {
  Element z(alg.dim());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = alg.field().add(x[i], y[i]);
  return z;
}

Element evaluate_relation(const Algebra& alg, const Relation& r) {
  Element sum = alg.zero();
  for (const auto& t : r.terms) {
    Element e = alg.normal_form(t.path);
    const Scalar c = alg.field().reduce(t.coefficient);
    for (auto& x : e) x = alg.field().mul(x, c);
    sum = add(alg, sum, e);
  }
  return sum;
}

Algebra from_text(const std::string& text) { return build_algebra(parse_algebra(text)); }

}  // namespace

TEST(Algebra, A2HasDimensionThree) {
  Algebra alg = builtin("a2");
  ASSERT_EQ(alg.dim(), 3u);
  EXPECT_EQ(alg.describe(0), "e1");
  EXPECT_EQ(alg.describe(1), "e2");
  EXPECT_EQ(alg.describe(2), "a");
}

TEST(Algebra, CycleDimensionMatchesEnumeration) {
  Algebra alg = builtin("cycle3");
  const auto& q = alg.quiver();
  std::vector<int> word;
  for (const auto& t : alg.relations()[0].terms[0].path.arrows) word.push_back(t);
  EXPECT_EQ(alg.dim(), count_monomial_paths(q, {word}, 40));
  EXPECT_EQ(alg.dim(), 30u);
  // Vertex 2 contributes paths of length 0..8, vertex 1 up to 9, vertex 3 up to 10.
  std::size_t from[3] = {0, 0, 0};
  for (const auto& b : alg.basis()) ++from[b.start];
  EXPECT_EQ(from[0], 10u);
  EXPECT_EQ(from[1], 9u);
  EXPECT_EQ(from[2], 11u);
}

TEST(Algebra, LongestPathTimesArrowVanishes) {
  Algebra alg = builtin("cycle3");
  const auto& q = alg.quiver();
  const int alpha = *q.arrow_index("alpha"), beta = *q.arrow_index("beta"), gamma = *q.arrow_index("gamma");
  // alpha.beta.gamma repeated three times: the length-9 basis path at vertex 1.
  PathWord w{0, {}};
  for (int i = 0; i < 3; ++i) w.arrows.insert(w.arrows.end(), {alpha, beta, gamma});
  auto b = alg.find_basis(w);
  ASSERT_TRUE(b.has_value());
  auto is_zero = [](const Element& e) { return std::all_of(e.begin(), e.end(), [](Scalar x) { return x == 0; }); };
  EXPECT_TRUE(is_zero(alg.multiply(alg.basis_element(*b), alg.basis_element(alg.arrow_element(beta)))));
  EXPECT_TRUE(is_zero(alg.multiply(alg.basis_element(*b), alg.basis_element(alg.arrow_element(alpha)))));
  // From vertex 2 the longest path has length 8.
  PathWord v{1, {beta, gamma, alpha, beta, gamma, alpha, beta, gamma}};
  ASSERT_TRUE(alg.find_basis(v).has_value());
  v.arrows.push_back(alpha);
  EXPECT_FALSE(alg.find_basis(v).has_value());
}

TEST(Algebra, UnitAndIdempotents) {
  Algebra alg = builtin("a2");
  Element e1 = alg.basis_element(alg.trivial(0));
  Element e2 = alg.basis_element(alg.trivial(1));
  Element a = alg.basis_element(alg.arrow_element(0));
  EXPECT_EQ(alg.multiply(e1, e1), e1);
  EXPECT_EQ(alg.multiply(a, e2), a);
  EXPECT_EQ(alg.multiply(e1, a), a);
  EXPECT_EQ(alg.multiply(e2, a), alg.zero());
}

TEST(Algebra, AssociativityIdentityAndRelations) {
  const std::string comm_square =
      "vertices 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation 1*a.b -1*c.d\nprime 101\n";
  const std::string comm_loops =
      "vertices 1\narrow x 1 1\narrow y 1 1\nrelation x.y -y.x\nrelation x.x\nrelation y.y\nprime 3\n";
  std::vector<Algebra> algs = {builtin("a3"), builtin("kronecker2"), builtin("cycle3"), from_text(comm_square),
                               from_text(comm_loops)};
  EXPECT_EQ(algs[3].dim(), 9u);
  EXPECT_EQ(algs[4].dim(), 4u);
  std::mt19937_64 rng(21);
  for (const auto& alg : algs) {
    const std::size_t d = alg.dim();
    Element one = alg.zero();
    for (int v = 0; v < alg.vertex_count(); ++v) one[alg.trivial(v)] = 1;
    for (std::size_t b = 0; b < d; ++b) {
      EXPECT_EQ(alg.multiply(one, alg.basis_element(b)), alg.basis_element(b));
      EXPECT_EQ(alg.multiply(alg.basis_element(b), one), alg.basis_element(b));
    }
    for (int t = 0; t < 1000; ++t) {
      Element x = alg.basis_element(rng() % d), y = alg.basis_element(rng() % d), z = alg.basis_element(rng() % d);
      ASSERT_EQ(alg.multiply(alg.multiply(x, y), z), alg.multiply(x, alg.multiply(y, z)));
    }
    for (const auto& r : alg.relations()) EXPECT_EQ(evaluate_relation(alg, r), alg.zero());
  }
}

TEST(Algebra, DeterministicBasis) {
  Algebra a = builtin("cycle3");
  Algebra b = builtin("cycle3");
  EXPECT_EQ(a.basis(), b.basis());
  EXPECT_EQ(algebra_hash(a), algebra_hash(b));
}

TEST(Algebra, Errors) {
  auto code_of = [](const std::string& text) {
    try {
      from_text(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of("vertices 1\narrow x 1 1\nprime 101\n"), ErrorCode::NotFiniteDimensional);
  EXPECT_EQ(code_of("vertices 2\narrow a 1 2\narrow b 2 1\nrelation a\nprime 101\n"), ErrorCode::NotAdmissible);
  EXPECT_EQ(code_of("vertices 2\narrow a 1 2\nprime 100\n"), ErrorCode::NotPrime);
  EXPECT_EQ(code_of("vertices 2\narrow a 1 3\n"), ErrorCode::ParseError);
  EXPECT_THROW(build_algebra(parse_algebra("vertices 1\narrow x 1 1\nrelation x.x.x\n"), 2), Error);
}

TEST(Algebra, OppositeReversesPaths) {
  Algebra alg = builtin("cycle3");
  Algebra op = alg.opposite();
  EXPECT_EQ(op.dim(), alg.dim());
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) EXPECT_EQ(op.paths(v, u).size(), alg.paths(u, v).size());
}

TEST(Algebra, FormatRoundTrip) {
  auto input = parse_algebra(*builtin_algebra_text("cycle3"));
  auto again = parse_algebra(format_algebra(input));
  EXPECT_EQ(format_algebra(again), format_algebra(input));
}
