#pragma once

#include <random>
#include <vector>

#include "gfan/lambda_matrix.hpp"

namespace gfan {

/// An indecomposable piece over F_p. When the residue field of its
/// endomorphism ring is F_{p^d} with d > 1, the piece splits over the
/// algebraic closure into d summands of g-vector g/d.
struct PresentationSummand {
  TwoTermPresentation piece;
  int residue_degree = 1;
};

/// Krull-Schmidt splitting in the homotopy category. Contractible parts are
/// removed first; locality of each piece is certified by the dimension of the
/// semisimple quotient of its endomorphism ring acting on tops. Throws
/// SplitUncertain after `attempts` inconclusive random endomorphisms.
std::vector<PresentationSummand> decompose_presentation(const Algebra& alg, const TwoTermPresentation& a,
                                                        std::mt19937_64& rng, int attempts = 64);

/// g-vectors of the summands over the algebraic closure, sorted.
std::vector<GVector> summand_g_vectors(const Algebra& alg, const std::vector<PresentationSummand>& pieces);

/// The subcomplex of `a` with the given arrow-stable subspaces of
/// P^{-1} and P^0 (each a direct summand), rewritten over indecomposable
/// projectives.
TwoTermPresentation restrict_to_subcomplex(const Algebra& alg, const TwoTermPresentation& a, const Subspaces& minus,
                                           const Subspaces& plus);

/// Action of a chain endomorphism on the tops of P^{-1} and P^0.
Matrix top_action(const Algebra& alg, const TwoTermPresentation& a, const ChainMap& phi);

}  // namespace gfan
