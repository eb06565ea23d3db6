#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfan/stability.hpp"
#include "gfan/tf_probe.hpp"

namespace gfan {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool passed() const { return violations.empty(); }
};

/// `count` seeded vectors with entries in [lo, hi].
std::vector<GVector> sample_g_vectors(int n, std::size_t count, int lo, int hi, std::uint64_t seed);

/// Summands add up to g and distinct summands are generically E-orthogonal.
SuiteResult check_decompositions(const Algebra& alg, const std::vector<GVector>& gs, const EngineOptions& opt = {});

/// Stabilized cones are simplicial with primitive integer rays, and cones
/// grow along divisibility. Stabilization below `min_stable` is a violation.
SuiteResult check_cones(const Algebra& alg, const std::vector<GVector>& gs, const ProbeOptions& opt = {},
                        double min_stable = 0.9);

/// Generically indecomposable summands of each reduced version are linearly
/// independent, and reduction keeps the cone.
SuiteResult check_reduced(const Algebra& alg, const std::vector<GVector>& gs, const ProbeOptions& opt = {});

/// Complete enumerations give a fan of simplicial chambers covering every
/// sampled direction, with n exchanges per pair. Enumeration stops
/// `max_depth` mutations away from (Lambda, 0).
SuiteResult check_fan(const Algebra& alg, std::size_t max_pairs = 2000, int max_depth = 12, std::uint64_t seed = 1);

/// No maps from Tbar to F or from T to Fbar, scale invariance under 2, 3, 7,
/// and constant signatures along segments between indistinguishable points.
SuiteResult check_torsion_axioms(const ModuleCatalog& catalog, std::size_t n_theta = 100, std::uint64_t seed = 1);

/// Open cones of summands sit inside the TF class, and equal summand sets
/// give equivalent vectors. Any witness is a violation.
SuiteResult check_open_cone_classes(const Algebra& alg, const ModuleCatalog& catalog, const std::vector<GVector>& gs,
                                    std::uint64_t seed = 1, const ProbeOptions& opt = {});

/// Interior points of the stabilized cone of each tame g are indistinguishable
/// from g. Boundary points are required to be distinguished only when
/// `gate_boundary` is set; otherwise misses are reported as notes.
SuiteResult check_tame_probe(const Algebra& alg, const ModuleCatalog& catalog, const std::vector<GVector>& gs,
                             bool gate_boundary, std::uint64_t seed = 1, const ProbeOptions& opt = {});

}  // namespace gfan
