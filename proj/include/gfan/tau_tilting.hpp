#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gfan/cone.hpp"
#include "gfan/lambda_matrix.hpp"
#include "gfan/representation.hpp"

namespace gfan {

/// One indecomposable summand of a 2-term silting complex: either a
/// tau-rigid module with its minimal presentation, or a shifted projective.
struct SiltingSummand {
  TwoTermPresentation complex;
  GVector g;
  std::optional<int> shifted_vertex;
  Representation module;  // zero for shifted projectives
};

SiltingSummand summand_from_complex(const Algebra& alg, const TwoTermPresentation& c);
SiltingSummand module_summand(const Algebra& alg, const Representation& m);
SiltingSummand shifted_projective(const Algebra& alg, int vertex);

/// A tau-rigid pair (M, P); summands are kept sorted by g-vector.
struct TauRigidPair {
  std::vector<SiltingSummand> summands;

  std::vector<Representation> m_summands() const;
  std::vector<int> p_summands() const;
  std::vector<GVector> g_vectors() const;
  bool is_support_tau_tilting(int n) const { return static_cast<int>(summands.size()) == n; }
};

TauRigidPair make_pair(const Algebra& alg, const std::vector<Representation>& m, const std::vector<int>& p);
/// (Lambda, 0) and (0, Lambda).
TauRigidPair projective_pair(const Algebra& alg);
TauRigidPair shifted_pair(const Algebra& alg);

bool is_tau_rigid_pair(const Algebra& alg, const std::vector<Representation>& m, const std::vector<int>& p);
bool is_tau_rigid_pair(const Algebra& alg, const TauRigidPair& pair);

/// Throws NotTauRigid.
RationalCone cone_of_pair(const Algebra& alg, const TauRigidPair& pair);

/// Exchanges summand k for the unique other completion of the rest.
/// Throws ApproximationFailed when no 2-term exchange is found.
TauRigidPair mutate(const Algebra& alg, const TauRigidPair& pair, std::size_t k, std::uint64_t seed = 1);

struct TauTiltingEnumeration {
  std::vector<TauRigidPair> pairs;  // sorted by g-vector multiset
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool complete = false;
  /// Key collisions whose modules were not isomorphic; kept as separate pairs.
  int unverified_collisions = 0;
};

TauTiltingEnumeration enumerate_tau_tilting(const Algebra& alg, std::size_t max_pairs = 10000, int max_depth = 64,
                                            std::uint64_t seed = 1);

struct ChamberFan {
  int dim = 0;
  std::vector<RationalCone> chambers;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
};

ChamberFan chamber_fan(const Algebra& alg, const TauTiltingEnumeration& e);
/// Distinct primitive rays of all chambers, sorted.
std::vector<QVector> fan_rays(const ChamberFan& fan);
/// Fraction of random integer directions lying in the closed union of chambers.
double fan_covering_check(const ChamberFan& fan, int n_directions, std::uint64_t seed);

}  // namespace gfan
