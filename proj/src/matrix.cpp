#include "gfan/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "gfan/error.hpp"

namespace gfan {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.cols());
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  const std::uint64_t p = f.prime();
  Matrix c(a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Scalar>(acc[j]);
  }
  return c;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix c(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = f.add(a(r, j), b(r, j));
  return c;
}

Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix c(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = f.sub(a(r, j), b(r, j));
  return c;
}

Matrix scale(const PrimeField& f, const Matrix& a, Scalar s) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = f.mul(a(r, j), s);
  return c;
}

std::vector<Scalar> apply(const PrimeField& f, const Matrix& a, std::span<const Scalar> x) {
  assert(a.cols() == x.size());
  const std::uint64_t p = f.prime();
  std::vector<Scalar> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t acc = 0;
    auto row = a.row(r);
    for (std::size_t c = 0; c < a.cols(); ++c) acc = (acc + static_cast<std::uint64_t>(row[c]) * x[c]) % p;
    y[r] = static_cast<Scalar>(acc);
  }
  return y;
}

Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.random(rng);
  return m;
}

namespace {

// row[target] -= factor * row[pivot], restricted to columns >= start.
inline void eliminate_row(std::span<Scalar> target, std::span<const Scalar> pivot, Scalar factor,
                          std::size_t start, std::uint64_t p) {
  const std::uint64_t neg = (p - factor) % p;
  for (std::size_t j = start; j < target.size(); ++j) {
    if (pivot[j] == 0) continue;
    target[j] = static_cast<Scalar>((target[j] + neg * pivot[j]) % p);
  }
}

template <bool Parallel>
EchelonForm row_reduce_impl(const PrimeField& f, Matrix m) {
  const std::uint64_t p = f.prime();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(lead).begin());
    const Scalar inv = f.inv(m(lead, c));
    for (std::size_t j = c; j < cols; ++j) m(lead, j) = f.mul(m(lead, j), inv);
    auto pivot_row = m.row(lead);
    const auto n = static_cast<std::ptrdiff_t>(rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t r = 0; r < n; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        if (ur == lead || m(ur, c) == 0) continue;
        eliminate_row(m.row(ur), pivot_row, m(ur, c), c, p);
      }
    } else {
      for (std::ptrdiff_t r = 0; r < n; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        if (ur == lead || m(ur, c) == 0) continue;
        eliminate_row(m.row(ur), pivot_row, m(ur, c), c, p);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

EchelonForm row_reduce_serial(const PrimeField& f, Matrix m) { return row_reduce_impl<false>(f, std::move(m)); }

EchelonForm row_reduce_parallel(const PrimeField& f, Matrix m) { return row_reduce_impl<true>(f, std::move(m)); }

EchelonForm row_reduce(const PrimeField& f, Matrix m) {
  constexpr std::size_t kParallelThreshold = 1u << 16;
  if (m.rows() * m.cols() >= kParallelThreshold) return row_reduce_parallel(f, std::move(m));
  return row_reduce_serial(f, std::move(m));
}

std::size_t rank(const PrimeField& f, const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(f, m).pivots.size();
}

Matrix nullspace(const PrimeField& f, const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(n);
  auto ech = row_reduce(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) basis(ech.pivots[i], k) = f.neg(ech.reduced(i, fc));
  }
  return basis;
}

Matrix column_basis(const PrimeField& f, const Matrix& m) {
  if (m.empty()) return Matrix(m.rows(), 0);
  auto ech = row_reduce(f, m);
  return m.select_columns(ech.pivots);
}

std::optional<Matrix> solve(const PrimeField& f, const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  if (a.rows() == 0) return x;
  auto ech = row_reduce(f, Matrix::hstack(a, b));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t c = ech.pivots[i];
    if (c >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = ech.reduced(i, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto ech = row_reduce(f, Matrix::hstack(a, Matrix::identity(a.rows())));
  if (ech.pivots.size() < a.rows() || (a.rows() > 0 && ech.pivots[a.rows() - 1] >= a.rows())) return std::nullopt;
  return ech.reduced.block(0, a.rows(), a.rows(), a.rows());
}

bool is_invertible(const PrimeField& f, const Matrix& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

std::vector<std::size_t> complement_indices(const PrimeField& f, const Matrix& basis) {
  const std::size_t n = basis.rows();
  auto ech = row_reduce(f, Matrix::hstack(basis, Matrix::identity(n)));
  std::vector<std::size_t> out;
  for (auto c : ech.pivots)
    if (c >= basis.cols()) out.push_back(c - basis.cols());
  return out;
}

Matrix power(const PrimeField& f, const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e) {
    if (e & 1) result = multiply(f, result, base);
    e >>= 1;
    if (e) base = multiply(f, base, base);
  }
  return result;
}

}  // namespace gfan
