#include "gfan/lambda_matrix.hpp"

#include <algorithm>
#include <cassert>

#include "gfan/error.hpp"

namespace gfan {

namespace {

bool element_is_zero(const Element& e) {
  return std::all_of(e.begin(), e.end(), [](Scalar x) { return x == 0; });
}

void add_into(const PrimeField& f, Element& acc, const Element& x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], x[i]);
}

}  // namespace

LambdaMatrix::LambdaMatrix(std::vector<int> rows, std::vector<int> cols, std::size_t algebra_dim)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(rows_.size() * cols_.size(), Element(algebra_dim, 0)) {}

bool LambdaMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), element_is_zero);
}

LambdaMatrix LambdaMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<int> rv, cv;
  for (auto r : rows) rv.push_back(rows_[r]);
  for (auto c : cols) cv.push_back(cols_[c]);
  const std::size_t d = entries_.empty() ? 0 : entries_[0].size();
  LambdaMatrix out(rv, cv, d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

LambdaMatrix lambda_multiply(const Algebra& alg, const LambdaMatrix& g, const LambdaMatrix& f) {
  assert(g.col_vertices() == f.row_vertices());
  LambdaMatrix out(g.row_vertices(), f.col_vertices(), alg.dim());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t l = 0; l < g.cols(); ++l) {
      if (element_is_zero(g.at(r, l))) continue;
      for (std::size_t c = 0; c < f.cols(); ++c) {
        if (element_is_zero(f.at(l, c))) continue;
        add_into(alg.field(), out.at(r, c), alg.multiply(g.at(r, l), f.at(l, c)));
      }
    }
  return out;
}

LambdaMatrix lambda_add(const Algebra& alg, const LambdaMatrix& a, const LambdaMatrix& b) {
  LambdaMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) add_into(alg.field(), out.at(r, c), b.at(r, c));
  return out;
}

LambdaMatrix lambda_scale(const Algebra& alg, const LambdaMatrix& a, Scalar s) {
  LambdaMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (auto& x : out.at(r, c)) x = alg.field().mul(x, s);
  return out;
}

LambdaMatrix lambda_identity(const Algebra& alg, const std::vector<int>& vertices) {
  LambdaMatrix out(vertices, vertices, alg.dim());
  for (std::size_t i = 0; i < vertices.size(); ++i) out.at(i, i)[alg.trivial(vertices[i])] = 1;
  return out;
}

LambdaMatrix lambda_block_diagonal(const Algebra& alg, const LambdaMatrix& a, const LambdaMatrix& b) {
  std::vector<int> rows = a.row_vertices(), cols = a.col_vertices();
  rows.insert(rows.end(), b.row_vertices().begin(), b.row_vertices().end());
  cols.insert(cols.end(), b.col_vertices().begin(), b.col_vertices().end());
  LambdaMatrix out(rows, cols, alg.dim());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

BlockSpace::BlockSpace(const Algebra& alg, std::vector<int> rows, std::vector<int> cols)
    : alg_(&alg), rows_(std::move(rows)), cols_(std::move(cols)) {
  offsets_.assign(rows_.size() * cols_.size() + 1, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      const std::size_t idx = r * cols_.size() + c;
      const auto& ps = alg.paths(rows_[r], cols_[c]);
      offsets_[idx + 1] = offsets_[idx] + ps.size();
      for (auto q : ps) slots_.push_back({r, c, q});
    }
}

std::vector<Scalar> BlockSpace::coords(const LambdaMatrix& m) const {
  std::vector<Scalar> x(size(), 0);
  for (std::size_t k = 0; k < slots_.size(); ++k) x[k] = m.at(slots_[k].row, slots_[k].col)[slots_[k].path];
  return x;
}

LambdaMatrix BlockSpace::from_coords(const std::vector<Scalar>& x) const {
  LambdaMatrix m(rows_, cols_, alg_->dim());
  for (std::size_t k = 0; k < slots_.size(); ++k) m.at(slots_[k].row, slots_[k].col)[slots_[k].path] = x[k];
  return m;
}

LambdaMatrix BlockSpace::from_column(const Matrix& mat, std::size_t col) const {
  LambdaMatrix m(rows_, cols_, alg_->dim());
  for (std::size_t k = 0; k < slots_.size(); ++k) m.at(slots_[k].row, slots_[k].col)[slots_[k].path] = mat(k, col);
  return m;
}

GVector TwoTermPresentation::g_vector(int n) const {
  GVector g(n, 0);
  for (int v : plus) ++g[v];
  for (int v : minus) --g[v];
  return g;
}

TwoTermPresentation zero_presentation(const Algebra& alg, const std::vector<int>& minus, const std::vector<int>& plus) {
  return {minus, plus, LambdaMatrix(plus, minus, alg.dim())};
}

TwoTermPresentation direct_sum(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b) {
  TwoTermPresentation out;
  out.minus = a.minus;
  out.minus.insert(out.minus.end(), b.minus.begin(), b.minus.end());
  out.plus = a.plus;
  out.plus.insert(out.plus.end(), b.plus.begin(), b.plus.end());
  out.map = lambda_block_diagonal(alg, a.map, b.map);
  return out;
}

bool is_contractible_free(const Algebra& alg, const TwoTermPresentation& p) {
  for (std::size_t r = 0; r < p.plus.size(); ++r)
    for (std::size_t c = 0; c < p.minus.size(); ++c)
      if (p.plus[r] == p.minus[c] && p.map.at(r, c)[alg.trivial(p.plus[r])] != 0) return false;
  return true;
}

ModuleMorphism to_module_morphism(const Algebra& alg, const LambdaMatrix& m) {
  const auto& f = alg.field();
  const int nv = alg.vertex_count();
  auto src = projective_offsets(alg, m.col_vertices());
  auto dst = projective_offsets(alg, m.row_vertices());
  ModuleMorphism phi;
  for (int w = 0; w < nv; ++w) {
    Matrix mat(dst[w][m.rows()], src[w][m.cols()]);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (auto q : alg.paths(m.col_vertices()[c], w)) {
        const std::size_t col = src[w][c] + alg.local_index(q);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          const Element& x = m.at(r, c);
          for (std::size_t b = 0; b < x.size(); ++b) {
            if (x[b] == 0) continue;
            for (const auto& [k, v] : alg.product(b, q)) {
              const std::size_t row = dst[w][r] + alg.local_index(k);
              mat(row, col) = f.add(mat(row, col), f.mul(x[b], v));
            }
          }
        }
      }
    }
    phi.maps.push_back(std::move(mat));
  }
  return phi;
}

std::vector<Element> vector_to_column(const Algebra& alg, const std::vector<int>& rows, int w, const std::vector<Scalar>& v) {
  auto off = projective_offsets(alg, rows);
  std::vector<Element> col(rows.size(), Element(alg.dim(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto q : alg.paths(rows[r], w)) col[r][q] = v[off[w][r] + alg.local_index(q)];
  return col;
}

LambdaMatrix from_module_morphism(const Algebra& alg, const ModuleMorphism& f, const std::vector<int>& source_vertices,
                                  const std::vector<int>& target_vertices) {
  auto src = projective_offsets(alg, source_vertices);
  LambdaMatrix m(target_vertices, source_vertices, alg.dim());
  for (std::size_t c = 0; c < source_vertices.size(); ++c) {
    const int i = source_vertices[c];
    if (f.maps.size() != static_cast<std::size_t>(alg.vertex_count()) || f.maps[i].cols() != src[i].back())
      throw Error(ErrorCode::NotProjective, "morphism source is not the stated sum of projectives");
    auto col = vector_to_column(alg, target_vertices, i, f.maps[i].column(src[i][c] + alg.local_index(alg.trivial(i))));
    for (std::size_t r = 0; r < target_vertices.size(); ++r) m.at(r, c) = col[r];
  }
  if (to_module_morphism(alg, m) != f) throw Error(ErrorCode::NotProjective, "morphism is not determined by generator images");
  return m;
}

ModuleMorphism nakayama(const Algebra& alg, const LambdaMatrix& m) {
  const auto& f = alg.field();
  const int nv = alg.vertex_count();
  // Offsets into sum_c I_{cols[c]} at vertex v.
  auto inj_off = [&](const std::vector<int>& verts) {
    std::vector<std::vector<std::size_t>> off(nv, std::vector<std::size_t>(verts.size() + 1, 0));
    for (int v = 0; v < nv; ++v)
      for (std::size_t c = 0; c < verts.size(); ++c) off[v][c + 1] = off[v][c] + alg.paths(v, verts[c]).size();
    return off;
  };
  auto src = inj_off(m.col_vertices());
  auto dst = inj_off(m.row_vertices());
  ModuleMorphism phi;
  for (int v = 0; v < nv; ++v) {
    Matrix mat(dst[v][m.rows()], src[v][m.cols()]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Element& x = m.at(r, c);
        // Row q (path v -> rows[r]), column q'' (path v -> cols[c]):
        // coefficient of q'' in q.x.
        for (auto q : alg.paths(v, m.row_vertices()[r])) {
          const std::size_t row = dst[v][r] + alg.local_index(q);
          for (std::size_t b = 0; b < x.size(); ++b) {
            if (x[b] == 0) continue;
            for (const auto& [k, val] : alg.product(q, b)) {
              const std::size_t col = src[v][c] + alg.local_index(k);
              mat(row, col) = f.add(mat(row, col), f.mul(x[b], val));
            }
          }
        }
      }
    }
    phi.maps.push_back(std::move(mat));
  }
  return phi;
}

Representation presentation_cokernel(const Algebra& alg, const TwoTermPresentation& p) {
  return cokernel(alg, to_module_morphism(alg, p.map), projective_sum(alg, p.plus)).module;
}

Representation presentation_ker_nu(const Algebra& alg, const TwoTermPresentation& p) {
  return kernel(alg, nakayama(alg, p.map), injective_sum(alg, p.minus)).module;
}

TwoTermPresentation minimal_presentation(const Algebra& alg, const Representation& m) {
  auto cover = projective_cover(alg, m);
  Representation p0 = projective_sum(alg, cover.vertices);
  auto ker = kernel(alg, cover.map, p0);
  auto kcover = projective_cover(alg, ker.module);
  TwoTermPresentation pres = zero_presentation(alg, kcover.vertices, cover.vertices);
  for (std::size_t c = 0; c < kcover.vertices.size(); ++c) {
    const int i = kcover.vertices[c];
    auto v = apply(alg.field(), ker.map.maps[i], kcover.generators[c]);
    auto col = vector_to_column(alg, cover.vertices, i, v);
    for (std::size_t r = 0; r < col.size(); ++r) pres.map.at(r, c) = col[r];
  }
  return pres;
}

GVector g_vector(const Algebra& alg, const Representation& m) {
  return minimal_presentation(alg, m).g_vector(alg.vertex_count());
}

Representation tau(const Algebra& alg, const Representation& m) {
  return presentation_ker_nu(alg, minimal_presentation(alg, m));
}

Representation dual(const Representation& m) {
  Representation d = m;
  for (auto& mat : d.maps) mat = mat.transpose();
  return d;
}

Representation tau_inverse(const Algebra& alg, const Algebra& opposite, const Representation& m) {
  (void)alg;
  return dual(tau(opposite, dual(m)));
}

Element local_unit_inverse(const Algebra& alg, int v, const Element& u) {
  const auto& f = alg.field();
  const std::size_t e = alg.trivial(v);
  const Scalar c0 = u[e];
  assert(c0 != 0);
  const Scalar inv0 = f.inv(c0);
  // u = c0 (e - t) with t nilpotent; u^{-1} = c0^{-1} (e + t + t^2 + ...).
  Element t(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (i != e) t[i] = f.neg(f.mul(u[i], inv0));
  Element sum = alg.basis_element(e);
  Element term = sum;
  for (;;) {
    term = alg.multiply(term, t);
    if (element_is_zero(term)) break;
    add_into(f, sum, term);
  }
  for (auto& x : sum) x = f.mul(x, inv0);
  return sum;
}

TwoTermPresentation strip_contractible(const Algebra& alg, const TwoTermPresentation& p0) {
  const auto& f = alg.field();
  TwoTermPresentation p = p0;
  for (;;) {
    std::size_t pr = p.plus.size(), pc = p.minus.size();
    for (std::size_t r = 0; r < p.plus.size() && pr == p.plus.size(); ++r)
      for (std::size_t c = 0; c < p.minus.size(); ++c)
        if (p.plus[r] == p.minus[c] && p.map.at(r, c)[alg.trivial(p.plus[r])] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == p.plus.size()) return p;
    const Element uinv = local_unit_inverse(alg, p.plus[pr], p.map.at(pr, pc));
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < p.plus.size(); ++r)
      if (r != pr) rows.push_back(r);
    for (std::size_t c = 0; c < p.minus.size(); ++c)
      if (c != pc) cols.push_back(c);
    LambdaMatrix next = p.map.select(rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Element& left = p.map.at(rows[i], pc);
      if (element_is_zero(left)) continue;
      const Element lu = alg.multiply(left, uinv);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const Element& right = p.map.at(pr, cols[j]);
        if (element_is_zero(right)) continue;
        Element corr = alg.multiply(lu, right);
        Element& slot = next.at(i, j);
        for (std::size_t k = 0; k < slot.size(); ++k) slot[k] = f.sub(slot[k], corr[k]);
      }
    }
    TwoTermPresentation q;
    for (auto r : rows) q.plus.push_back(p.plus[r]);
    for (auto c : cols) q.minus.push_back(p.minus[c]);
    q.map = std::move(next);
    p = std::move(q);
  }
}

std::size_t chain_unknowns(const Algebra& alg, const std::vector<int>& a_minus, const std::vector<int>& a_plus,
                           const std::vector<int>& b_minus, const std::vector<int>& b_plus) {
  std::size_t n = 0;
  for (int r : b_minus)
    for (int c : a_minus) n += alg.paths(r, c).size();
  for (int r : b_plus)
    for (int c : a_plus) n += alg.paths(r, c).size();
  return n;
}

namespace {

// Adds coefficient * (x . q) into column `col` of `mat` at the residual block (r, c).
void add_right_product(const Algebra& alg, Matrix& mat, std::size_t col, const BlockSpace& space, std::size_t r,
                       std::size_t c, const Element& x, std::size_t q, bool negate) {
  const auto& f = alg.field();
  const std::size_t base = space.offset(r, c);
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b] == 0) continue;
    for (const auto& [k, v] : alg.product(b, q)) {
      Scalar add = f.mul(x[b], v);
      if (negate) add = f.neg(add);
      Scalar& slot = mat(base + alg.local_index(k), col);
      slot = f.add(slot, add);
    }
  }
}

void add_left_product(const Algebra& alg, Matrix& mat, std::size_t col, const BlockSpace& space, std::size_t r,
                      std::size_t c, std::size_t q, const Element& x, bool negate) {
  const auto& f = alg.field();
  const std::size_t base = space.offset(r, c);
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b] == 0) continue;
    for (const auto& [k, v] : alg.product(q, b)) {
      Scalar add = f.mul(x[b], v);
      if (negate) add = f.neg(add);
      Scalar& slot = mat(base + alg.local_index(k), col);
      slot = f.add(slot, add);
    }
  }
}

// Columns (F1, F0) = (H d_a, d_b H) for each basis homotopy H.
Matrix homotopy_columns(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b,
                        const BlockSpace& f1, const BlockSpace& f0) {
  BlockSpace h(alg, b.minus, a.plus);
  Matrix cols(f1.size() + f0.size(), h.size());
  // Sub-views into the stacked coordinate vector.
  Matrix top(f1.size(), h.size()), bottom(f0.size(), h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    auto s = h.slot(k);
    for (std::size_t c = 0; c < a.minus.size(); ++c) add_left_product(alg, top, k, f1, s.row, c, s.path, a.map.at(s.col, c), false);
    for (std::size_t l = 0; l < b.plus.size(); ++l) add_right_product(alg, bottom, k, f0, l, s.col, b.map.at(l, s.row), s.path, false);
  }
  cols.set_block(0, 0, top);
  cols.set_block(f1.size(), 0, bottom);
  return cols;
}

}  // namespace

ChainSystem chain_system(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b) {
  ChainSystem sys{BlockSpace(alg, b.minus, a.minus), BlockSpace(alg, b.plus, a.plus), BlockSpace(alg, b.plus, a.minus), Matrix()};
  sys.matrix = Matrix(sys.residual.size(), sys.f1.size() + sys.f0.size());
  for (std::size_t k = 0; k < sys.f1.size(); ++k) {
    auto s = sys.f1.slot(k);  // b.minus row s.row, a.minus col s.col
    for (std::size_t l = 0; l < b.plus.size(); ++l)
      add_right_product(alg, sys.matrix, k, sys.residual, l, s.col, b.map.at(l, s.row), s.path, true);
  }
  for (std::size_t k = 0; k < sys.f0.size(); ++k) {
    auto s = sys.f0.slot(k);  // b.plus row s.row, a.plus col s.col
    for (std::size_t c = 0; c < a.minus.size(); ++c)
      add_left_product(alg, sys.matrix, sys.f1.size() + k, sys.residual, s.row, c, s.path, a.map.at(s.col, c), false);
  }
  return sys;
}

namespace {

ChainMap chain_from_column(const ChainSystem& sys, const Matrix& m, std::size_t col) {
  std::vector<Scalar> x1(sys.f1.size()), x0(sys.f0.size());
  for (std::size_t i = 0; i < x1.size(); ++i) x1[i] = m(i, col);
  for (std::size_t i = 0; i < x0.size(); ++i) x0[i] = m(x1.size() + i, col);
  return {sys.f1.from_coords(x1), sys.f0.from_coords(x0)};
}

}  // namespace

std::vector<ChainMap> chain_maps(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b) {
  ChainSystem sys = chain_system(alg, a, b);
  Matrix z = sys.matrix.rows() ? nullspace(alg.field(), sys.matrix) : Matrix::identity(sys.matrix.cols());
  std::vector<ChainMap> out;
  for (std::size_t k = 0; k < z.cols(); ++k) out.push_back(chain_from_column(sys, z, k));
  return out;
}

std::vector<ChainMap> homotopy_hom(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b) {
  ChainSystem sys = chain_system(alg, a, b);
  Matrix z = sys.matrix.rows() ? nullspace(alg.field(), sys.matrix) : Matrix::identity(sys.matrix.cols());
  Matrix h = homotopy_columns(alg, a, b, sys.f1, sys.f0);
  auto ech = row_reduce(alg.field(), Matrix::hstack(h, z));
  std::vector<ChainMap> out;
  for (auto p : ech.pivots)
    if (p >= h.cols()) out.push_back(chain_from_column(sys, z, p - h.cols()));
  return out;
}

std::size_t homotopy_hom_dim(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b) {
  ChainSystem sys = chain_system(alg, a, b);
  const std::size_t nullity = sys.matrix.cols() - rank(alg.field(), sys.matrix);
  Matrix h = homotopy_columns(alg, a, b, sys.f1, sys.f0);
  return nullity - rank(alg.field(), h);
}

std::size_t e_invariant(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b) {
  ChainSystem sys = chain_system(alg, a, b);
  return sys.residual.size() - rank(alg.field(), sys.matrix);
}

}  // namespace gfan
