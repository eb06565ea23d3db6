#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gfan/algebra.hpp"
#include "gfan/matrix.hpp"

namespace gfan {

using DimensionVector = std::vector<int>;

/// Vertex spaces F^{dims[v]} and one matrix per arrow, rows indexed by the
/// target space.
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  DimensionVector dimension_vector() const;
  bool operator==(const Representation&) const = default;
};

/// One matrix per vertex, target dimension by source dimension.
struct ModuleMorphism {
  std::vector<Matrix> maps;
  bool operator==(const ModuleMorphism&) const = default;
};

Representation zero_representation(const Algebra& alg);
Representation simple(const Algebra& alg, int i);
Representation projective(const Algebra& alg, int i);
Representation injective(const Algebra& alg, int i);
Representation direct_sum(const Algebra& alg, const std::vector<Representation>& parts);
/// Shorthand: projectives P_{v} for each listed vertex, in order.
Representation projective_sum(const Algebra& alg, const std::vector<int>& vertices);
Representation injective_sum(const Algebra& alg, const std::vector<int>& vertices);
/// Offset of summand c inside vertex w of projective_sum(vertices).
std::vector<std::vector<std::size_t>> projective_offsets(const Algebra& alg, const std::vector<int>& vertices);

bool satisfies_relations(const Algebra& alg, const Representation& m);
/// Action of a basis path: dims[target] x dims[source].
Matrix path_action(const Algebra& alg, const Representation& m, std::size_t basis_path);

ModuleMorphism identity_morphism(const Representation& m);
ModuleMorphism zero_morphism(const Representation& source, const Representation& target);
ModuleMorphism compose(const Algebra& alg, const ModuleMorphism& second, const ModuleMorphism& first);
ModuleMorphism combine(const Algebra& alg, const std::vector<ModuleMorphism>& basis, const std::vector<Scalar>& coeffs);
bool is_morphism(const Algebra& alg, const ModuleMorphism& f, const Representation& source, const Representation& target);
bool is_bijective(const Algebra& alg, const ModuleMorphism& f);

std::vector<ModuleMorphism> hom_space(const Algebra& alg, const Representation& m, const Representation& n);
std::size_t hom_dim(const Algebra& alg, const Representation& m, const Representation& n);
ModuleMorphism random_morphism(const Algebra& alg, const Representation& m, const Representation& n, std::mt19937_64& rng);

/// A representation with a structure map: inclusion for sub-objects,
/// projection for quotients.
struct ModuleWithMap {
  Representation module;
  ModuleMorphism map;
};

/// Per-vertex subspaces given by basis columns.
using Subspaces = std::vector<Matrix>;

/// Subrepresentation spanned by `spaces`, which must be arrow-stable.
ModuleWithMap submodule(const Algebra& alg, const Representation& m, const Subspaces& spaces);
ModuleWithMap quotient(const Algebra& alg, const Representation& m, const Subspaces& spaces);
/// Smallest subrepresentation containing the given vectors.
Subspaces generated_subspaces(const Algebra& alg, const Representation& m, const Subspaces& generators);

ModuleWithMap kernel(const Algebra& alg, const ModuleMorphism& f, const Representation& source);
ModuleWithMap image(const Algebra& alg, const ModuleMorphism& f, const Representation& target);
ModuleWithMap cokernel(const Algebra& alg, const ModuleMorphism& f, const Representation& target);

Subspaces radical(const Algebra& alg, const Representation& m);
DimensionVector top_dimension_vector(const Algebra& alg, const Representation& m);

/// Projective cover: summand vertices, and the surjection from their sum.
struct ProjectiveCover {
  std::vector<int> vertices;
  std::vector<std::vector<Scalar>> generators;  // generator c lies in M at vertices[c]
  ModuleMorphism map;
};
ProjectiveCover projective_cover(const Algebra& alg, const Representation& m);
/// Map P_{vertices[c]} -> M sending e to generators[c], for all c.
ModuleMorphism map_from_projectives(const Algebra& alg, const std::vector<int>& vertices,
                                    const std::vector<std::vector<Scalar>>& generators, const Representation& m);

/// Membership in the smallest torsion class containing C (trace tower).
bool in_smallest_torsion_class(const Algebra& alg, const Representation& c, const Representation& x);
/// Membership in the smallest torsion-free class containing K (reject tower).
bool in_smallest_torsionfree_class(const Algebra& alg, const Representation& k, const Representation& x);

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<ModuleMorphism> forward;  // a certificate f with f^{-1} below
  std::optional<ModuleMorphism> backward;
};
/// Monte Carlo: searches 32 random homomorphisms for a bijective one.
IsoVerdict isomorphism(const Algebra& alg, const Representation& m, const Representation& n, std::uint64_t seed = 0x15);
bool is_isomorphic(const Algebra& alg, const Representation& m, const Representation& n, std::uint64_t seed = 0x15);

/// Change of basis: g_v M_a g_u^{-1}.
Representation transport(const Algebra& alg, const Representation& m, const std::vector<Matrix>& change);

/// Splits a representation into indecomposables by Fitting decomposition of
/// random endomorphisms. Not certified over small fields.
std::vector<Representation> decompose_module(const Algebra& alg, const Representation& m, std::mt19937_64& rng,
                                             int attempts = 64);

/// Dense linear map on the total space, block diagonal over vertices.
Matrix total_matrix(const ModuleMorphism& f);

}  // namespace gfan
