#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfan/cone.hpp"
#include "gfan/lambda_matrix.hpp"
#include "gfan/presentation.hpp"
#include "gfan/representation.hpp"

namespace gfan {

/// Dimension vectors of all subrepresentations, sorted. Exhaustive search
/// over arrow-stable subspaces; only feasible over very small fields.
std::vector<DimensionVector> subdimvecs(const Algebra& alg, const Representation& m, std::size_t dim_cap = 10);

struct CatalogMember {
  Representation module;
  std::string provenance;
  std::vector<DimensionVector> subdims;
};

struct CatalogOptions {
  std::uint32_t field = 2;
  std::size_t dim_cap = 10;
  std::size_t max_members = 500;
  int random_morphisms = 200;
  int orbit_length = 8;
  std::uint64_t seed = 1;
};

/// Indecomposable test modules over a small-field copy of an algebra.
struct ModuleCatalog {
  Algebra twin;
  std::vector<CatalogMember> members;
  std::size_t dim_cap = 0;
  std::uint64_t hash = 0;
};

ModuleCatalog build_catalog(const Algebra& alg, const CatalogOptions& opt = {});

/// Membership of one module in the four semistable torsion classes at theta.
struct TorsionFlags {
  bool t_bar = false;
  bool f_bar = false;
  bool t = false;
  bool f = false;
  bool operator==(const TorsionFlags&) const = default;
};

TorsionFlags torsion_flags(const QVector& theta, const DimensionVector& dims, const std::vector<DimensionVector>& subdims);
TorsionFlags torsion_flags(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap = 10);

bool in_Tbar(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap = 10);
bool in_Fbar(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap = 10);
bool in_T(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap = 10);
bool in_F(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap = 10);
bool is_semistable(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap = 10);

/// Torsion pairs of a presentation: T_a = T(Coker a), Tbar_a = left perp of
/// Ker nu a, F_a = F(Ker nu a), Fbar_a = right perp of Coker a.
TorsionFlags presentation_torsion_membership(const Algebra& alg, const TwoTermPresentation& a, const Representation& x);

struct TorsionSignature {
  std::vector<TorsionFlags> flags;
  std::uint64_t catalog_hash = 0;
  /// (Tbar, Fbar) columns only.
  std::vector<bool> defining() const;
};

TorsionSignature tf_signature(const QVector& theta, const ModuleCatalog& catalog);

struct TFProbe {
  bool distinguished = false;
  std::optional<std::size_t> witness;  // catalog index
  std::string reason;
  std::uint64_t catalog_hash = 0;
};

TFProbe tf_equivalent_probe(const QVector& theta, const QVector& eta, const ModuleCatalog& catalog);

struct WSpaceEstimate {
  std::vector<std::size_t> semistable;
  std::size_t span = 0;
};

WSpaceEstimate w_space_estimate(const QVector& theta, const ModuleCatalog& catalog);

/// Rank over Q of integer vectors.
std::size_t rational_rank(const std::vector<DimensionVector>& vs);
std::size_t rational_rank(const std::vector<QVector>& vs);

/// A presentation over the small field with the generic cokernel and
/// Ker nu dimension vectors of g (found by rejection sampling).
std::optional<TwoTermPresentation> twin_sample(const Algebra& alg, const Algebra& twin, const GVector& g,
                                               std::uint64_t seed, int tries = 256);

struct DgVerdict {
  bool member = false;
  int witness_s = 0;
  /// Verdict of the torsion-class criterion on a small-field sample, when
  /// it could be evaluated.
  std::optional<bool> torsion_check;
  bool anomaly = false;
};

DgVerdict in_Dg(const Algebra& alg, const ModuleCatalog& catalog, const GVector& h, const GVector& g, int s_max,
                const EngineOptions& opt = {});

/// All integer vectors in [lo, hi]^n.
std::vector<GVector> box_grid(int n, int lo, int hi);

std::size_t count_semistable_tp_signatures(const GVector& g, const std::vector<GVector>& grid,
                                           const ModuleCatalog& catalog);

/// Signatures of many points, evaluated in parallel, in input order.
std::vector<TorsionSignature> signatures_for(const std::vector<QVector>& points, const ModuleCatalog& catalog);
/// Reference loop for signatures_for.
std::vector<TorsionSignature> signatures_for_serial(const std::vector<QVector>& points, const ModuleCatalog& catalog);

}  // namespace gfan
