#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gfan/decompose.hpp"
#include "gfan/lambda_matrix.hpp"

namespace gfan {

/// Sorted (g-vector, multiplicity) pairs.
using GMultiset = std::vector<std::pair<GVector, int>>;

GMultiset to_multiset(const std::vector<GVector>& gs);
std::vector<GVector> expand(const GMultiset& m);
GMultiset scale_multiset(const GMultiset& m, int t);
GMultiset union_multiset(const GMultiset& a, const GMultiset& b);
std::string format_multiset(const GMultiset& m);
std::string format_g(const GVector& g);
GVector parse_g(const std::string& csv);

struct GenericDecomposition {
  GMultiset summands;
  int samples_used = 0;
  bool consensus = false;
  /// Cross-check failures that survived the retry, if any.
  std::vector<std::string> anomalies;
};

/// P^{-1} = sum of P_i^{g_i^-}, P^0 = sum of P_i^{g_i^+}, uniformly random
/// coefficients on every path of every block.
TwoTermPresentation sample_presentation(const Algebra& alg, const GVector& g, std::mt19937_64& rng);
TwoTermPresentation sample_presentation(const Algebra& alg, const GVector& g, std::uint64_t seed);

/// Seed for sample `index` of g, derived from the user seed.
std::uint64_t derive_seed(std::uint64_t seed, const GVector& g, std::uint64_t index);

struct EngineOptions {
  int samples = 8;
  int retry_samples = 32;
  std::uint64_t seed = 1;
  /// Largest chain-map system (unknowns) attempted directly.
  std::size_t budget = 1600;
};

GenericDecomposition generic_decomposition(const Algebra& alg, const GVector& g, const EngineOptions& opt = {});
std::vector<GVector> ind_set(const Algebra& alg, const GVector& g, const EngineOptions& opt = {});
bool is_tame(const Algebra& alg, const GVector& g, const EngineOptions& opt = {});

/// Cost of decomposing a sample of g: unknowns of its endomorphism system.
std::size_t decomposition_cost(const Algebra& alg, const GVector& g);

/// e(a, b) and e(b, a) vanish for fresh independent samples of g and h.
bool generically_e_orthogonal(const Algebra& alg, const GVector& g, const GVector& h, std::uint64_t seed);

void clear_decomposition_memo();

}  // namespace gfan
