#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfan/cone.hpp"
#include "gfan/presentation.hpp"
#include "gfan/stability.hpp"

namespace gfan {

struct ProbeOptions {
  EngineOptions engine;
  int t_max = 24;
};

/// Multipliers 1..6, 8, 12, 24 up to t_max.
std::vector<int> multiplier_ladder(int t_max);

struct ConeOfMultiples {
  GVector g;
  std::map<int, GMultiset> per_t;
  /// Multipliers whose wild part was too large to decompose.
  std::vector<int> skipped;
  RationalCone union_cone;
  std::optional<int> stabilized_at;
  /// Tested t | t' with Cone(ind(tg)) not inside Cone(ind(t'g)).
  int inclusion_violations = 0;
};

/// ind(tg) is assembled summand by summand from the generic decomposition of
/// g: a tame summand h contributes h itself, a wild one is decomposed at
/// its multiple directly.
ConeOfMultiples cone_of_multiples(const Algebra& alg, const GVector& g, const ProbeOptions& opt = {});

bool ray_condition_proxy(const ConeOfMultiples& c);
bool ray_condition_proxy(const Algebra& alg, const GVector& g, const ProbeOptions& opt = {});

bool is_reduced(const Algebra& alg, const GVector& g, const ProbeOptions& opt = {});

struct ReducedVersion {
  GVector g;
  /// Union cones of the input and the output agree.
  bool cones_agree = false;
};
ReducedVersion reduced_version(const Algebra& alg, const GVector& g, const ProbeOptions& opt = {});

GVector tame_part(const Algebra& alg, const GVector& g, const ProbeOptions& opt = {});

struct DimensionReport {
  std::size_t cone_span = 0;       // dim of the span of ind(Ng)
  std::size_t class_span = 0;      // lower bound for dim of the span of [g]_TF
  std::size_t w_estimate = 0;      // lower bound for dim W_g
  std::size_t class_kernel = 0;    // n - class_span
  bool codimension_one = false;    // cone_span = n - 1
  std::size_t outside_interior = 0;  // indistinguishable grid points off the open cone
  std::uint64_t catalog_hash = 0;
};

DimensionReport dimension_report(const Algebra& alg, const ModuleCatalog& catalog, const GVector& g,
                                 const std::vector<GVector>& grid, const ProbeOptions& opt = {});

struct MembershipSample {
  QVector point;
  std::optional<std::size_t> witness;  // catalog member telling it apart from g
};

struct InteriorProbe {
  std::vector<MembershipSample> interior;
  std::vector<MembershipSample> boundary;
  bool tame_part_nonzero = false;
  std::size_t interior_distinguished() const;
  std::size_t boundary_indistinguished() const;
};

InteriorProbe interior_membership_probe(const Algebra& alg, const ModuleCatalog& catalog, const GVector& g,
                                        int n_points = 32, std::uint64_t seed = 1, const ProbeOptions& opt = {});

/// Random points in the relative interior of a cone (positive integer
/// combinations of all rays).
std::vector<QVector> interior_points(const RationalCone& c, int count, std::mt19937_64& rng);
/// Random points on the relative boundary, each in some proper face.
std::vector<QVector> boundary_points(const RationalCone& c, int count, std::mt19937_64& rng);

}  // namespace gfan
