#include "gfan/representation.hpp"

#include <cassert>
#include <numeric>

#include "gfan/polynomial.hpp"

namespace gfan {

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

DimensionVector Representation::dimension_vector() const {
  return DimensionVector(dims.begin(), dims.end());
}

Representation zero_representation(const Algebra& alg) {
  Representation m;
  m.dims.assign(alg.vertex_count(), 0);
  m.maps.assign(alg.quiver().arrows.size(), Matrix());
  return m;
}

Representation simple(const Algebra& alg, int i) {
  Representation m = zero_representation(alg);
  m.dims.at(i) = 1;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    m.maps[a] = Matrix(m.dims[arr.target], m.dims[arr.source]);
  }
  return m;
}

Representation projective(const Algebra& alg, int i) {
  const int n = alg.vertex_count();
  Representation m;
  m.dims.resize(n);
  for (int w = 0; w < n; ++w) m.dims[w] = alg.paths(i, w).size();
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    Matrix mat(m.dims[arr.target], m.dims[arr.source]);
    const std::size_t ab = alg.arrow_element(static_cast<int>(a));
    for (std::size_t q : alg.paths(i, arr.source))
      for (const auto& [k, c] : alg.product(q, ab)) mat(alg.local_index(k), alg.local_index(q)) = c;
    m.maps.push_back(std::move(mat));
  }
  return m;
}

Representation injective(const Algebra& alg, int i) {
  const int n = alg.vertex_count();
  Representation m;
  m.dims.resize(n);
  for (int v = 0; v < n; ++v) m.dims[v] = alg.paths(v, i).size();
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    Matrix mat(m.dims[arr.target], m.dims[arr.source]);
    const std::size_t ab = alg.arrow_element(static_cast<int>(a));
    // (a.phi)(q') = phi(a q') for q' a path from the target of a to i.
    for (std::size_t qp : alg.paths(arr.target, i))
      for (const auto& [k, c] : alg.product(ab, qp)) mat(alg.local_index(qp), alg.local_index(k)) = c;
    m.maps.push_back(std::move(mat));
  }
  return m;
}

Representation direct_sum(const Algebra& alg, const std::vector<Representation>& parts) {
  Representation m = zero_representation(alg);
  for (const auto& p : parts)
    for (int v = 0; v < alg.vertex_count(); ++v) m.dims[v] += p.dims[v];
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    Matrix mat(m.dims[arr.target], m.dims[arr.source]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      mat.set_block(r0, c0, p.maps[a]);
      r0 += p.dims[arr.target];
      c0 += p.dims[arr.source];
    }
    m.maps[a] = std::move(mat);
  }
  return m;
}

Representation projective_sum(const Algebra& alg, const std::vector<int>& vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(projective(alg, v));
  return direct_sum(alg, parts);
}

Representation injective_sum(const Algebra& alg, const std::vector<int>& vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(injective(alg, v));
  return direct_sum(alg, parts);
}

std::vector<std::vector<std::size_t>> projective_offsets(const Algebra& alg, const std::vector<int>& vertices) {
  const int n = alg.vertex_count();
  std::vector<std::vector<std::size_t>> off(n, std::vector<std::size_t>(vertices.size() + 1, 0));
  for (int w = 0; w < n; ++w)
    for (std::size_t c = 0; c < vertices.size(); ++c) off[w][c + 1] = off[w][c] + alg.paths(vertices[c], w).size();
  return off;
}

Matrix path_action(const Algebra& alg, const Representation& m, std::size_t basis_path) {
  const auto& w = alg.basis()[basis_path];
  Matrix acc = Matrix::identity(m.dims[w.start]);
  for (int a : w.arrows) acc = multiply(alg.field(), m.maps[a], acc);
  return acc;
}

bool satisfies_relations(const Algebra& alg, const Representation& m) {
  const auto& f = alg.field();
  for (const auto& rel : alg.relations()) {
    if (rel.terms.empty()) continue;
    const auto& first = rel.terms.front().path;
    Matrix sum(m.dims[first.end(alg.quiver())], m.dims[first.start]);
    for (const auto& t : rel.terms) {
      Matrix acc = Matrix::identity(m.dims[t.path.start]);
      for (int a : t.path.arrows) acc = multiply(f, m.maps[a], acc);
      sum = add(f, sum, scale(f, acc, f.reduce(t.coefficient)));
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

ModuleMorphism identity_morphism(const Representation& m) {
  ModuleMorphism f;
  for (auto d : m.dims) f.maps.push_back(Matrix::identity(d));
  return f;
}

ModuleMorphism zero_morphism(const Representation& source, const Representation& target) {
  ModuleMorphism f;
  for (std::size_t v = 0; v < source.dims.size(); ++v) f.maps.emplace_back(target.dims[v], source.dims[v]);
  return f;
}

ModuleMorphism compose(const Algebra& alg, const ModuleMorphism& second, const ModuleMorphism& first) {
  ModuleMorphism f;
  for (std::size_t v = 0; v < first.maps.size(); ++v) f.maps.push_back(multiply(alg.field(), second.maps[v], first.maps[v]));
  return f;
}

ModuleMorphism combine(const Algebra& alg, const std::vector<ModuleMorphism>& basis, const std::vector<Scalar>& coeffs) {
  assert(!basis.empty());
  ModuleMorphism f;
  for (const auto& mat : basis[0].maps) f.maps.emplace_back(mat.rows(), mat.cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
      f.maps[v] = add(alg.field(), f.maps[v], scale(alg.field(), basis[k].maps[v], coeffs[k]));
  }
  return f;
}

bool is_morphism(const Algebra& alg, const ModuleMorphism& f, const Representation& source, const Representation& target) {
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    if (multiply(alg.field(), target.maps[a], f.maps[arr.source]) != multiply(alg.field(), f.maps[arr.target], source.maps[a]))
      return false;
  }
  return true;
}

bool is_bijective(const Algebra& alg, const ModuleMorphism& f) {
  for (const auto& m : f.maps)
    if (!is_invertible(alg.field(), m)) return false;
  return true;
}

std::vector<ModuleMorphism> hom_space(const Algebra& alg, const Representation& m, const Representation& n) {
  const int nv = alg.vertex_count();
  const auto& f = alg.field();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};
  std::size_t equations = 0;
  for (const auto& arr : alg.quiver().arrows) equations += n.dims[arr.target] * m.dims[arr.source];
  // X_v is stored row-major at offset[v]; entry (r, c) is unknown offset[v] + r * m.dims[v] + c.
  Matrix sys(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const int u = alg.quiver().arrows[a].source;
    const int v = alg.quiver().arrows[a].target;
    const Matrix& na = n.maps[a];
    const Matrix& ma = m.maps[a];
    // (N_a X_u - X_v M_a)[r][c] = 0
    for (std::size_t r = 0; r < n.dims[v]; ++r) {
      for (std::size_t c = 0; c < m.dims[u]; ++c, ++row) {
        for (std::size_t k = 0; k < n.dims[u]; ++k)
          if (na(r, k)) sys(row, offset[u] + k * m.dims[u] + c) = f.add(sys(row, offset[u] + k * m.dims[u] + c), na(r, k));
        for (std::size_t k = 0; k < m.dims[v]; ++k)
          if (ma(k, c)) sys(row, offset[v] + r * m.dims[v] + k) = f.sub(sys(row, offset[v] + r * m.dims[v] + k), ma(k, c));
      }
    }
  }
  Matrix ns = nullspace(f, sys);
  std::vector<ModuleMorphism> basis;
  for (std::size_t k = 0; k < ns.cols(); ++k) {
    ModuleMorphism phi;
    for (int v = 0; v < nv; ++v) {
      Matrix x(n.dims[v], m.dims[v]);
      for (std::size_t r = 0; r < n.dims[v]; ++r)
        for (std::size_t c = 0; c < m.dims[v]; ++c) x(r, c) = ns(offset[v] + r * m.dims[v] + c, k);
      phi.maps.push_back(std::move(x));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

std::size_t hom_dim(const Algebra& alg, const Representation& m, const Representation& n) {
  return hom_space(alg, m, n).size();
}

ModuleMorphism random_morphism(const Algebra& alg, const Representation& m, const Representation& n, std::mt19937_64& rng) {
  auto basis = hom_space(alg, m, n);
  if (basis.empty()) return zero_morphism(m, n);
  std::vector<Scalar> c(basis.size());
  for (auto& x : c) x = alg.field().random(rng);
  return combine(alg, basis, c);
}

ModuleWithMap submodule(const Algebra& alg, const Representation& m, const Subspaces& spaces) {
  const auto& f = alg.field();
  ModuleWithMap out;
  out.module = zero_representation(alg);
  for (int v = 0; v < alg.vertex_count(); ++v) {
    out.module.dims[v] = spaces[v].cols();
    out.map.maps.push_back(spaces[v]);
  }
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    Matrix image = multiply(f, m.maps[a], spaces[arr.source]);
    auto x = solve(f, spaces[arr.target], image);
    assert(x.has_value());
    out.module.maps[a] = x ? std::move(*x) : Matrix(spaces[arr.target].cols(), spaces[arr.source].cols());
  }
  return out;
}

ModuleWithMap quotient(const Algebra& alg, const Representation& m, const Subspaces& spaces) {
  const auto& f = alg.field();
  const int nv = alg.vertex_count();
  ModuleWithMap out;
  out.module = zero_representation(alg);
  std::vector<std::vector<std::size_t>> comp(nv);
  for (int v = 0; v < nv; ++v) {
    comp[v] = complement_indices(f, spaces[v]);
    out.module.dims[v] = comp[v].size();
    Matrix full = spaces[v];
    Matrix e(m.dims[v], comp[v].size());
    for (std::size_t j = 0; j < comp[v].size(); ++j) e(comp[v][j], j) = 1;
    full = Matrix::hstack(full, e);
    auto inv = inverse(f, full);
    assert(inv.has_value());
    out.map.maps.push_back(inv->block(spaces[v].cols(), 0, comp[v].size(), m.dims[v]));
  }
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    Matrix cols = m.maps[a].select_columns(comp[arr.source]);
    out.module.maps[a] = multiply(f, out.map.maps[arr.target], cols);
  }
  return out;
}

Subspaces generated_subspaces(const Algebra& alg, const Representation& m, const Subspaces& generators) {
  const auto& f = alg.field();
  Subspaces s;
  for (int v = 0; v < alg.vertex_count(); ++v) s.push_back(column_basis(f, generators[v]));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
      const auto& arr = alg.quiver().arrows[a];
      if (s[arr.source].cols() == 0) continue;
      Matrix img = multiply(f, m.maps[a], s[arr.source]);
      Matrix joined = column_basis(f, Matrix::hstack(s[arr.target], img));
      if (joined.cols() > s[arr.target].cols()) {
        s[arr.target] = std::move(joined);
        changed = true;
      }
    }
  }
  return s;
}

ModuleWithMap kernel(const Algebra& alg, const ModuleMorphism& f, const Representation& source) {
  Subspaces k;
  for (int v = 0; v < alg.vertex_count(); ++v) k.push_back(nullspace(alg.field(), f.maps[v]));
  return submodule(alg, source, k);
}

ModuleWithMap image(const Algebra& alg, const ModuleMorphism& f, const Representation& target) {
  Subspaces im;
  for (int v = 0; v < alg.vertex_count(); ++v) im.push_back(column_basis(alg.field(), f.maps[v]));
  return submodule(alg, target, im);
}

ModuleWithMap cokernel(const Algebra& alg, const ModuleMorphism& f, const Representation& target) {
  Subspaces im;
  for (int v = 0; v < alg.vertex_count(); ++v) im.push_back(column_basis(alg.field(), f.maps[v]));
  return quotient(alg, target, im);
}

Subspaces radical(const Algebra& alg, const Representation& m) {
  const int nv = alg.vertex_count();
  Subspaces rad;
  for (int v = 0; v < nv; ++v) rad.emplace_back(m.dims[v], 0);
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const int t = alg.quiver().arrows[a].target;
    rad[t] = Matrix::hstack(rad[t], m.maps[a]);
  }
  for (int v = 0; v < nv; ++v) rad[v] = column_basis(alg.field(), rad[v]);
  return rad;
}

DimensionVector top_dimension_vector(const Algebra& alg, const Representation& m) {
  auto rad = radical(alg, m);
  DimensionVector d(alg.vertex_count());
  for (int v = 0; v < alg.vertex_count(); ++v) d[v] = static_cast<int>(m.dims[v] - rad[v].cols());
  return d;
}

ModuleMorphism map_from_projectives(const Algebra& alg, const std::vector<int>& vertices,
                                    const std::vector<std::vector<Scalar>>& generators, const Representation& m) {
  const int nv = alg.vertex_count();
  auto off = projective_offsets(alg, vertices);
  ModuleMorphism phi;
  for (int w = 0; w < nv; ++w) {
    Matrix mat(m.dims[w], off[w][vertices.size()]);
    for (std::size_t c = 0; c < vertices.size(); ++c) {
      for (std::size_t q : alg.paths(vertices[c], w)) {
        auto col = apply(alg.field(), path_action(alg, m, q), generators[c]);
        for (std::size_t r = 0; r < col.size(); ++r) mat(r, off[w][c] + alg.local_index(q)) = col[r];
      }
    }
    phi.maps.push_back(std::move(mat));
  }
  return phi;
}

ProjectiveCover projective_cover(const Algebra& alg, const Representation& m) {
  auto rad = radical(alg, m);
  ProjectiveCover cover;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    for (auto idx : complement_indices(alg.field(), rad[v])) {
      std::vector<Scalar> g(m.dims[v], 0);
      g[idx] = 1;
      cover.vertices.push_back(v);
      cover.generators.push_back(std::move(g));
    }
  }
  cover.map = map_from_projectives(alg, cover.vertices, cover.generators, m);
  return cover;
}

bool in_smallest_torsion_class(const Algebra& alg, const Representation& c, const Representation& x0) {
  Representation x = x0;
  while (!x.is_zero()) {
    auto homs = hom_space(alg, c, x);
    Subspaces trace;
    std::size_t total = 0;
    for (int v = 0; v < alg.vertex_count(); ++v) {
      Matrix cols(x.dims[v], 0);
      for (const auto& h : homs) cols = Matrix::hstack(cols, h.maps[v]);
      trace.push_back(column_basis(alg.field(), cols));
      total += trace.back().cols();
    }
    if (total == 0) return false;
    x = quotient(alg, x, trace).module;
  }
  return true;
}

bool in_smallest_torsionfree_class(const Algebra& alg, const Representation& k, const Representation& x0) {
  Representation x = x0;
  while (!x.is_zero()) {
    auto homs = hom_space(alg, x, k);
    Subspaces reject;
    std::size_t total = 0;
    for (int v = 0; v < alg.vertex_count(); ++v) {
      Matrix rows(0, x.dims[v]);
      for (const auto& h : homs) rows = Matrix::vstack(rows, h.maps[v]);
      reject.push_back(nullspace(alg.field(), rows));
      total += reject.back().cols();
    }
    if (total == x.total_dim()) return false;
    x = submodule(alg, x, reject).module;
  }
  return true;
}

IsoVerdict isomorphism(const Algebra& alg, const Representation& m, const Representation& n, std::uint64_t seed) {
  IsoVerdict verdict;
  if (m.dims != n.dims) return verdict;
  if (m.is_zero()) {
    verdict.isomorphic = true;
    verdict.forward = zero_morphism(m, n);
    verdict.backward = zero_morphism(n, m);
    return verdict;
  }
  auto basis = hom_space(alg, m, n);
  if (basis.empty()) return verdict;
  std::mt19937_64 rng(seed);
  std::vector<Scalar> c(basis.size());
  for (int trial = 0; trial < 32; ++trial) {
    for (auto& x : c) x = alg.field().random(rng);
    ModuleMorphism f = combine(alg, basis, c);
    if (!is_bijective(alg, f)) continue;
    ModuleMorphism g;
    for (const auto& mat : f.maps) g.maps.push_back(*inverse(alg.field(), mat));
    verdict.isomorphic = true;
    verdict.forward = std::move(f);
    verdict.backward = std::move(g);
    return verdict;
  }
  return verdict;
}

bool is_isomorphic(const Algebra& alg, const Representation& m, const Representation& n, std::uint64_t seed) {
  return isomorphism(alg, m, n, seed).isomorphic;
}

Representation transport(const Algebra& alg, const Representation& m, const std::vector<Matrix>& change) {
  Representation out = m;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = alg.quiver().arrows[a];
    auto inv = inverse(alg.field(), change[arr.source]);
    out.maps[a] = multiply(alg.field(), multiply(alg.field(), change[arr.target], m.maps[a]), *inv);
  }
  return out;
}

Matrix total_matrix(const ModuleMorphism& f) {
  std::size_t rows = 0, cols = 0;
  for (const auto& m : f.maps) {
    rows += m.rows();
    cols += m.cols();
  }
  Matrix t(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& m : f.maps) {
    t.set_block(r, c, m);
    r += m.rows();
    c += m.cols();
  }
  return t;
}

std::vector<Representation> decompose_module(const Algebra& alg, const Representation& m, std::mt19937_64& rng, int attempts) {
  const auto& f = alg.field();
  std::vector<Representation> done;
  std::vector<Representation> stack;
  if (!m.is_zero()) stack.push_back(m);
  while (!stack.empty()) {
    Representation x = std::move(stack.back());
    stack.pop_back();
    auto end = hom_space(alg, x, x);
    bool split = false;
    if (end.size() > 1) {
      std::vector<Scalar> c(end.size());
      for (int attempt = 0; attempt < attempts && !split; ++attempt) {
        for (auto& v : c) v = f.random(rng);
        ModuleMorphism phi = combine(alg, end, c);
        Poly s = squarefree_part(f, characteristic_polynomial(f, total_matrix(phi)));
        auto h = nontrivial_factor(f, s, rng);
        if (!h) continue;
        ModuleMorphism psi;
        for (const auto& mat : phi.maps) psi.maps.push_back(power(f, evaluate(f, *h, mat), x.total_dim()));
        auto k = kernel(alg, psi, x);
        auto im = image(alg, psi, x);
        if (k.module.is_zero() || im.module.is_zero()) continue;
        stack.push_back(std::move(k.module));
        stack.push_back(std::move(im.module));
        split = true;
      }
    }
    if (!split) done.push_back(std::move(x));
  }
  return done;
}

}  // namespace gfan
