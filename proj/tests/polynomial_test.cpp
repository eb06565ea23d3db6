#include <gtest/gtest.h>

#include "gfan/polynomial.hpp"

using namespace gfan;

namespace {

// Brute force irreducibility over tiny fields: no monic divisor of degree
// 1..deg/2.
bool irreducible_oracle(const PrimeField& f, const Poly& a) {
  const int n = degree(a);
  const std::uint32_t p = f.prime();
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly c(d + 1, 0);
      std::uint64_t x = code;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<Scalar>(x % p);
        x /= p;
      }
      c[d] = 1;
      if (poly_mod(f, a, c).empty()) return false;
    }
  }
  return n >= 1;
}

Poly random_monic(const PrimeField& f, int deg, std::mt19937_64& rng) {
  Poly a(deg + 1);
  for (auto& c : a) c = f.random(rng);
  a[deg] = 1;
  return a;
}

}  // namespace

TEST(Polynomial, FactorAgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      Poly a = random_monic(f, 1 + trial % 7, rng);
      bool sqfree = degree(squarefree_part(f, a)) == degree(a);
      auto factor = nontrivial_factor(f, a, rng);
      if (factor) {
        EXPECT_GT(degree(*factor), 0);
        EXPECT_LT(degree(*factor), degree(a));
        EXPECT_TRUE(poly_mod(f, a, *factor).empty());
      }
      if (sqfree) EXPECT_EQ(!factor.has_value(), irreducible_oracle(f, a)) << "p=" << p;
    }
  }
}

TEST(Polynomial, SquarefreePartOfPowers) {
  PrimeField f(2);
  std::mt19937_64 rng(12);
  Poly x1 = {1, 1};     // x + 1
  Poly x2 = {1, 1, 1};  // x^2 + x + 1
  Poly a = poly_mul(f, poly_mul(f, x1, x1), poly_mul(f, x2, poly_mul(f, x2, x2)));
  EXPECT_EQ(squarefree_part(f, a), poly_mul(f, x1, x2));
  Poly b = poly_mul(f, x2, x2);  // derivative vanishes in characteristic 2
  EXPECT_EQ(squarefree_part(f, b), x2);
  EXPECT_FALSE(nontrivial_factor(f, b, rng).has_value());
}

TEST(Polynomial, CharacteristicPolynomialKillsMatrix) {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 32003u}) {
    PrimeField f(p);
    for (int n = 1; n < 12; ++n) {
      Matrix m = random_matrix(f, n, n, rng);
      Poly c = characteristic_polynomial(f, m);
      ASSERT_EQ(degree(c), n);
      EXPECT_EQ(c.back(), 1u);
      EXPECT_TRUE(evaluate(f, c, m).is_zero());
    }
  }
}

TEST(Polynomial, CharacteristicPolynomialOfCompanion) {
  PrimeField f(101);
  // companion of x^3 - 2x + 5
  Matrix c(3, 3);
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = f.reduce(-5);
  c(1, 2) = 2;
  Poly expected = {5, f.reduce(-2), 0, 1};
  EXPECT_EQ(characteristic_polynomial(f, c), expected);
}
