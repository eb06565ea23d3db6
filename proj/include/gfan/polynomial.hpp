#pragma once

#include <optional>
#include <random>
#include <vector>

#include "gfan/field.hpp"
#include "gfan/matrix.hpp"

namespace gfan {

/// Univariate polynomial over F_p, coefficients from degree 0 upward, no
/// trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

int degree(const Poly& a);
Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b);
Poly poly_mod(const PrimeField& f, const Poly& a, const Poly& m);
Poly poly_div(const PrimeField& f, const Poly& a, const Poly& m);
Poly poly_gcd(const PrimeField& f, Poly a, Poly b);
Poly poly_monic(const PrimeField& f, const Poly& a);
Poly poly_derivative(const PrimeField& f, const Poly& a);
Poly poly_powmod(const PrimeField& f, const Poly& a, std::uint64_t e, const Poly& m);

/// Product of the distinct monic irreducible factors.
Poly squarefree_part(const PrimeField& f, const Poly& a);

/// A monic divisor of a with 0 < deg < deg a, or nullopt when a is a power of
/// an irreducible (in particular when a is irreducible). Randomized
/// equal-degree splitting draws from rng.
std::optional<Poly> nontrivial_factor(const PrimeField& f, const Poly& a, std::mt19937_64& rng);

bool is_irreducible(const PrimeField& f, const Poly& a, std::mt19937_64& rng);

/// det(xI - m), via reduction to Hessenberg form.
Poly characteristic_polynomial(const PrimeField& f, const Matrix& m);

/// p(m) by Horner's rule.
Matrix evaluate(const PrimeField& f, const Poly& p, const Matrix& m);

}  // namespace gfan
