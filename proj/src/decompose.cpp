#include "gfan/decompose.hpp"

#include <algorithm>
#include <cassert>

#include "gfan/error.hpp"
#include "gfan/polynomial.hpp"

namespace gfan {

Matrix top_action(const Algebra& alg, const TwoTermPresentation& a, const ChainMap& phi) {
  const std::size_t m = a.minus.size();
  const std::size_t s = m + a.plus.size();
  Matrix t(s, s);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (a.minus[r] == a.minus[c]) t(r, c) = phi.f1.at(r, c)[alg.trivial(a.minus[r])];
  for (std::size_t r = 0; r < a.plus.size(); ++r)
    for (std::size_t c = 0; c < a.plus.size(); ++c)
      if (a.plus[r] == a.plus[c]) t(m + r, m + c) = phi.f0.at(r, c)[alg.trivial(a.plus[r])];
  return t;
}

TwoTermPresentation restrict_to_subcomplex(const Algebra& alg, const TwoTermPresentation& a, const Subspaces& minus,
                                           const Subspaces& plus) {
  const auto& f = alg.field();
  Representation p0 = projective_sum(alg, a.plus);
  Representation p1 = projective_sum(alg, a.minus);
  auto sub0 = submodule(alg, p0, plus);
  auto sub1 = submodule(alg, p1, minus);
  auto cover0 = projective_cover(alg, sub0.module);
  auto cover1 = projective_cover(alg, sub1.module);
  ModuleMorphism d = to_module_morphism(alg, a.map);
  TwoTermPresentation out = zero_presentation(alg, cover1.vertices, cover0.vertices);
  for (std::size_t c = 0; c < cover1.vertices.size(); ++c) {
    const int i = cover1.vertices[c];
    auto g = apply(f, sub1.map.maps[i], cover1.generators[c]);
    auto y = apply(f, d.maps[i], g);
    Matrix ym = Matrix::from_columns(y.size(), {y});
    auto x = solve(f, sub0.map.maps[i], ym);
    assert(x.has_value());
    auto z = solve(f, cover0.map.maps[i], *x);
    assert(z.has_value());
    auto col = vector_to_column(alg, cover0.vertices, i, z->column(0));
    for (std::size_t r = 0; r < col.size(); ++r) out.map.at(r, c) = col[r];
  }
  return out;
}

namespace {

ChainMap combine_chain(const Algebra& alg, const std::vector<ChainMap>& basis, const std::vector<Scalar>& c) {
  ChainMap phi{lambda_scale(alg, basis[0].f1, c[0]), lambda_scale(alg, basis[0].f0, c[0])};
  for (std::size_t k = 1; k < basis.size(); ++k) {
    if (c[k] == 0) continue;
    phi.f1 = lambda_add(alg, phi.f1, lambda_scale(alg, basis[k].f1, c[k]));
    phi.f0 = lambda_add(alg, phi.f0, lambda_scale(alg, basis[k].f0, c[k]));
  }
  return phi;
}

// Dimension of A / rad A for the algebra spanned by `mats`, through the rank
// of the trace form. Valid while the characteristic exceeds the matrix size.
std::size_t semisimple_dimension(const PrimeField& f, const std::vector<Matrix>& mats) {
  if (mats.empty()) return 0;
  const std::size_t s = mats[0].rows();
  Matrix vec(s * s, mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) vec(i * s + j, k) = mats[k](i, j);
  auto ech = row_reduce(f, vec);
  std::vector<const Matrix*> basis;
  for (auto p : ech.pivots) basis.push_back(&mats[p]);
  Matrix gram(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      std::uint64_t tr = 0;
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) tr = (tr + static_cast<std::uint64_t>((*basis[a])(i, j)) * (*basis[b])(j, i)) % f.prime();
      gram(a, b) = gram(b, a) = static_cast<Scalar>(tr);
    }
  return rank(f, gram);
}

Subspaces fitting_part(const Algebra& alg, const ModuleMorphism& psi, bool want_kernel) {
  Subspaces out;
  for (const auto& m : psi.maps) out.push_back(want_kernel ? nullspace(alg.field(), m) : column_basis(alg.field(), m));
  return out;
}

ModuleMorphism polynomial_power(const Algebra& alg, const Poly& h, const ModuleMorphism& phi, std::uint64_t n) {
  ModuleMorphism out;
  for (const auto& m : phi.maps) out.maps.push_back(power(alg.field(), evaluate(alg.field(), h, m), n));
  return out;
}

}  // namespace

std::vector<PresentationSummand> decompose_presentation(const Algebra& alg, const TwoTermPresentation& a,
                                                        std::mt19937_64& rng, int attempts) {
  const auto& f = alg.field();
  std::vector<PresentationSummand> out;
  std::vector<TwoTermPresentation> stack{strip_contractible(alg, a)};
  while (!stack.empty()) {
    TwoTermPresentation c = std::move(stack.back());
    stack.pop_back();
    if (c.summand_count() == 0) continue;
    if (c.minus.empty() || c.plus.empty()) {
      for (int v : c.minus) out.push_back({zero_presentation(alg, {v}, {}), 1});
      for (int v : c.plus) out.push_back({zero_presentation(alg, {}, {v}), 1});
      continue;
    }
    auto end = chain_maps(alg, c, c);
    std::vector<Matrix> tops;
    for (const auto& phi : end) tops.push_back(top_action(alg, c, phi));
    const std::size_t r = semisimple_dimension(f, tops);
    if (r == 1) {
      out.push_back({std::move(c), 1});
      continue;
    }
    bool decided = false;
    std::vector<Scalar> coeffs(end.size());
    for (int attempt = 0; attempt < attempts && !decided; ++attempt) {
      for (auto& x : coeffs) x = f.random(rng);
      Matrix t(tops[0].rows(), tops[0].cols());
      for (std::size_t k = 0; k < tops.size(); ++k) t = add(f, t, scale(f, tops[k], coeffs[k]));
      Poly s = squarefree_part(f, characteristic_polynomial(f, t));
      auto h = nontrivial_factor(f, s, rng);
      if (!h) {
        if (static_cast<std::size_t>(degree(s)) == r) {
          out.push_back({std::move(c), static_cast<int>(r)});
          decided = true;
        }
        continue;
      }
      ChainMap phi = combine_chain(alg, end, coeffs);
      ModuleMorphism m1 = to_module_morphism(alg, phi.f1);
      ModuleMorphism m0 = to_module_morphism(alg, phi.f0);
      const std::uint64_t n = projective_sum(alg, c.minus).total_dim() + projective_sum(alg, c.plus).total_dim();
      ModuleMorphism psi1 = polynomial_power(alg, *h, m1, n);
      ModuleMorphism psi0 = polynomial_power(alg, *h, m0, n);
      auto ker = restrict_to_subcomplex(alg, c, fitting_part(alg, psi1, true), fitting_part(alg, psi0, true));
      auto img = restrict_to_subcomplex(alg, c, fitting_part(alg, psi1, false), fitting_part(alg, psi0, false));
      if (ker.summand_count() == 0 || img.summand_count() == 0) continue;
      stack.push_back(strip_contractible(alg, ker));
      stack.push_back(strip_contractible(alg, img));
      decided = true;
    }
    if (!decided)
      throw Error(ErrorCode::SplitUncertain, "no idempotent or locality certificate after " + std::to_string(attempts) + " attempts");
  }
  return out;
}

std::vector<GVector> summand_g_vectors(const Algebra& alg, const std::vector<PresentationSummand>& pieces) {
  std::vector<GVector> out;
  for (const auto& p : pieces) {
    GVector g = p.piece.g_vector(alg.vertex_count());
    for (auto& x : g) {
      if (x % p.residue_degree != 0)
        throw Error(ErrorCode::SplitUncertain, "residue degree does not divide the g-vector");
      x /= p.residue_degree;
    }
    for (int k = 0; k < p.residue_degree; ++k) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gfan
