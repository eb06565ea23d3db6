#include "gfan/stability.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gfan/error.hpp"
#include "gfan/hash.hpp"

namespace gfan {

namespace {

// Calls visit(basis) for every subspace of F_q^k; basis is k x r.
void for_each_subspace(std::uint32_t q, std::size_t k, const std::function<void(const Matrix&)>& visit) {
  for (std::size_t r = 0; r <= k; ++r) {
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      // Free slots: row i, column j > piv[i] that is not a pivot column.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = piv[i] + 1; j < k; ++j)
          if (!std::binary_search(piv.begin(), piv.end(), j)) free.emplace_back(i, j);
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Matrix b(k, r);
        for (std::size_t i = 0; i < r; ++i) b(piv[i], i) = 1;
        for (std::size_t s = 0; s < free.size(); ++s) b(free[s].second, free[s].first) = digits[s];
        visit(b);
        std::size_t s = 0;
        while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
        if (s == digits.size()) break;
      }
      // Next combination of pivot columns.
      if (r == 0) break;
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == k - r + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

// Rows spanning the annihilator of the column space of u (d x r).
Matrix annihilator(const PrimeField& f, const Matrix& u, std::size_t d) {
  if (u.cols() == 0) return Matrix::identity(d);
  return nullspace(f, u.transpose()).transpose();
}

struct SubmoduleSearch {
  const Algebra& alg;
  const Representation& m;
  std::vector<Matrix> chosen;
  std::set<DimensionVector> found;

  void run(int v) {
    const auto& f = alg.field();
    const int n = alg.vertex_count();
    if (v == n) {
      DimensionVector d(n);
      for (int w = 0; w < n; ++w) d[w] = static_cast<int>(chosen[w].cols());
      found.insert(d);
      return;
    }
    const std::size_t dv = m.dims[v];
    Matrix required(dv, 0);
    Matrix constraint(0, dv);
    const auto& arrows = alg.quiver().arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const auto& arr = arrows[a];
      if (arr.target == v && arr.source < v && dv)
        required = Matrix::hstack(required, multiply(f, m.maps[a], chosen[arr.source]));
      if (arr.source == v && arr.target < v && dv) {
        auto q = annihilator(f, chosen[arr.target], m.dims[arr.target]);
        constraint = Matrix::vstack(constraint, multiply(f, q, m.maps[a]));
      }
    }
    Matrix allowed = constraint.rows() ? nullspace(f, constraint) : Matrix::identity(dv);
    const std::size_t s = allowed.cols();
    Matrix base(s, 0);
    if (required.cols()) {
      auto x = solve(f, allowed, required);
      if (!x) return;
      base = column_basis(f, *x);
    }
    auto comp = complement_indices(f, base);
    for_each_subspace(f.prime(), comp.size(), [&](const Matrix& z) {
      Matrix lifted(s, z.cols());
      for (std::size_t c = 0; c < z.cols(); ++c)
        for (std::size_t i = 0; i < comp.size(); ++i) lifted(comp[i], c) = z(i, c);
      Matrix w = Matrix::hstack(base, lifted);
      Matrix u = s ? multiply(f, allowed, w) : Matrix(dv, 0);
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (arrows[a].source != v || arrows[a].target != v) continue;
        auto image = multiply(f, m.maps[a], u);
        if (rank(f, Matrix::hstack(u, image)) != u.cols()) return;
      }
      chosen[v] = u;
      run(v + 1);
    });
  }
};

Rational pair(const QVector& theta, const DimensionVector& d) {
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i]) s += theta[i] * d[i];
  return s;
}

}  // namespace

std::vector<DimensionVector> subdimvecs(const Algebra& alg, const Representation& m, std::size_t dim_cap) {
  if (m.total_dim() > dim_cap)
    throw Error(ErrorCode::CapExceeded,
                "module of dimension " + std::to_string(m.total_dim()) + " exceeds cap " + std::to_string(dim_cap));
  SubmoduleSearch search{alg, m, std::vector<Matrix>(alg.vertex_count()), {}};
  search.run(0);
  return {search.found.begin(), search.found.end()};
}

TorsionFlags torsion_flags(const QVector& theta, const DimensionVector& dims, const std::vector<DimensionVector>& subdims) {
  TorsionFlags out{true, true, true, true};
  const DimensionVector zero(dims.size(), 0);
  for (const auto& s : subdims) {
    DimensionVector q(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) q[i] = dims[i] - s[i];
    Rational on_quotient = pair(theta, q), on_sub = pair(theta, s);
    if (on_quotient < 0) out.t_bar = false;
    if (s != dims && on_quotient <= 0) out.t = false;
    if (on_sub > 0) out.f_bar = false;
    if (s != zero && on_sub >= 0) out.f = false;
  }
  return out;
}

TorsionFlags torsion_flags(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap) {
  return torsion_flags(theta, m.dimension_vector(), subdimvecs(twin, m, dim_cap));
}

bool in_Tbar(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap) {
  return torsion_flags(twin, theta, m, dim_cap).t_bar;
}
bool in_Fbar(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap) {
  return torsion_flags(twin, theta, m, dim_cap).f_bar;
}
bool in_T(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap) {
  return torsion_flags(twin, theta, m, dim_cap).t;
}
bool in_F(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap) {
  return torsion_flags(twin, theta, m, dim_cap).f;
}
bool is_semistable(const Algebra& twin, const QVector& theta, const Representation& m, std::size_t dim_cap) {
  auto fl = torsion_flags(twin, theta, m, dim_cap);
  return fl.t_bar && fl.f_bar;
}

TorsionFlags presentation_torsion_membership(const Algebra& alg, const TwoTermPresentation& a, const Representation& x) {
  auto coker = presentation_cokernel(alg, a);
  auto ker_nu = presentation_ker_nu(alg, a);
  TorsionFlags out;
  out.t_bar = hom_dim(alg, x, ker_nu) == 0;
  out.f_bar = hom_dim(alg, coker, x) == 0;
  out.t = in_smallest_torsion_class(alg, coker, x);
  out.f = in_smallest_torsionfree_class(alg, ker_nu, x);
  return out;
}

std::vector<bool> TorsionSignature::defining() const {
  std::vector<bool> out;
  out.reserve(2 * flags.size());
  for (const auto& fl : flags) out.push_back(fl.t_bar);
  for (const auto& fl : flags) out.push_back(fl.f_bar);
  return out;
}

TorsionSignature tf_signature(const QVector& theta, const ModuleCatalog& catalog) {
  TorsionSignature sig;
  sig.catalog_hash = catalog.hash;
  for (const auto& m : catalog.members)
    sig.flags.push_back(torsion_flags(theta, m.module.dimension_vector(), m.subdims));
  return sig;
}

std::vector<TorsionSignature> signatures_for(const std::vector<QVector>& points, const ModuleCatalog& catalog) {
  std::vector<TorsionSignature> out(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = tf_signature(points[i], catalog);
  return out;
}

std::vector<TorsionSignature> signatures_for_serial(const std::vector<QVector>& points, const ModuleCatalog& catalog) {
  std::vector<TorsionSignature> out;
  for (const auto& p : points) out.push_back(tf_signature(p, catalog));
  return out;
}

TFProbe tf_equivalent_probe(const QVector& theta, const QVector& eta, const ModuleCatalog& catalog) {
  TFProbe out;
  out.catalog_hash = catalog.hash;
  auto a = tf_signature(theta, catalog), b = tf_signature(eta, catalog);
  for (std::size_t i = 0; i < catalog.members.size(); ++i) {
    if (a.flags[i].t_bar != b.flags[i].t_bar) {
      out.distinguished = true;
      out.witness = i;
      out.reason = a.flags[i].t_bar ? "in Tbar of the first only" : "in Tbar of the second only";
      return out;
    }
    if (a.flags[i].f_bar != b.flags[i].f_bar) {
      out.distinguished = true;
      out.witness = i;
      out.reason = a.flags[i].f_bar ? "in Fbar of the first only" : "in Fbar of the second only";
      return out;
    }
  }
  return out;
}

std::size_t rational_rank(const std::vector<QVector>& vs) {
  if (vs.empty()) return 0;
  std::vector<QVector> rows = vs;
  const std::size_t width = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < width; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t rational_rank(const std::vector<DimensionVector>& vs) {
  std::vector<QVector> q;
  for (const auto& v : vs) q.push_back(to_rational(v));
  return rational_rank(q);
}

WSpaceEstimate w_space_estimate(const QVector& theta, const ModuleCatalog& catalog) {
  WSpaceEstimate out;
  auto sig = tf_signature(theta, catalog);
  std::vector<DimensionVector> dims;
  for (std::size_t i = 0; i < sig.flags.size(); ++i)
    if (sig.flags[i].t_bar && sig.flags[i].f_bar) {
      out.semistable.push_back(i);
      dims.push_back(catalog.members[i].module.dimension_vector());
    }
  out.span = rational_rank(dims);
  return out;
}

std::optional<TwoTermPresentation> twin_sample(const Algebra& alg, const Algebra& twin, const GVector& g,
                                               std::uint64_t seed, int tries) {
  auto generic = sample_presentation(alg, g, derive_seed(seed, g, 0x7711));
  auto want_coker = presentation_cokernel(alg, generic).dimension_vector();
  auto want_ker = presentation_ker_nu(alg, generic).dimension_vector();
  for (int k = 0; k < tries; ++k) {
    auto a = sample_presentation(twin, g, derive_seed(seed, g, 0x7712 + k));
    if (presentation_cokernel(twin, a).dimension_vector() == want_coker &&
        presentation_ker_nu(twin, a).dimension_vector() == want_ker)
      return a;
  }
  return std::nullopt;
}

DgVerdict in_Dg(const Algebra& alg, const ModuleCatalog& catalog, const GVector& h, const GVector& g, int s_max,
                const EngineOptions& opt) {
  if (s_max < 1) throw Error(ErrorCode::InvalidArgument, "s_max must be positive");
  if (h.size() != g.size()) throw Error(ErrorCode::InvalidArgument, "g-vector lengths differ");
  DgVerdict out;
  auto base = generic_decomposition(alg, g, opt).summands;
  for (int s = 1; s <= s_max && !out.member; ++s) {
    GVector sh = h, sum = g;
    for (std::size_t i = 0; i < h.size(); ++i) sh[i] *= s, sum[i] += sh[i];
    auto combined = generic_decomposition(alg, sum, opt).summands;
    if (combined == union_multiset(base, generic_decomposition(alg, sh, opt).summands)) {
      out.member = true;
      out.witness_s = s;
    }
  }
  if (auto a = twin_sample(alg, catalog.twin, g, opt.seed)) {
    try {
      QVector theta = to_rational(h);
      auto coker = presentation_cokernel(catalog.twin, *a);
      auto ker_nu = presentation_ker_nu(catalog.twin, *a);
      std::size_t cap = std::max(catalog.dim_cap, coker.total_dim()) + 2;
      cap = std::min<std::size_t>(cap, 14);
      out.torsion_check = torsion_flags(catalog.twin, theta, coker, cap).t_bar &&
                          torsion_flags(catalog.twin, theta, ker_nu, cap).f_bar;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
    }
  }
  out.anomaly = out.torsion_check && *out.torsion_check != out.member;
  return out;
}

std::vector<GVector> box_grid(int n, int lo, int hi) {
  if (n < 0 || lo > hi) throw Error(ErrorCode::InvalidArgument, "empty grid");
  std::vector<GVector> out;
  GVector v(n, lo);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

std::size_t count_semistable_tp_signatures(const GVector& g, const std::vector<GVector>& grid,
                                           const ModuleCatalog& catalog) {
  auto base = tf_signature(to_rational(g), catalog);
  std::vector<QVector> points;
  for (const auto& h : grid) points.push_back(to_rational(h));
  auto sigs = signatures_for(points, catalog);
  std::set<std::vector<bool>> distinct;
  for (const auto& s : sigs) {
    bool above = true;
    for (std::size_t i = 0; i < s.flags.size() && above; ++i) {
      if (base.flags[i].t_bar && !s.flags[i].t_bar) above = false;
      if (base.flags[i].f_bar && !s.flags[i].f_bar) above = false;
    }
    if (above) distinct.insert(s.defining());
  }
  return distinct.size();
}

}  // namespace gfan
