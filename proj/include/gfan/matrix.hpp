#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gfan/field.hpp"

namespace gfan {

/// Dense row-major matrix over a prime field. The field is passed to each
/// operation; the matrix itself only stores reduced representatives.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(std::span<const std::size_t> cols) const;
  std::vector<Scalar> column(std::size_t c) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, const Matrix& a, Scalar s);
std::vector<Scalar> apply(const PrimeField& f, const Matrix& a, std::span<const Scalar> x);
Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

struct EchelonForm {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reference Gauss-Jordan elimination.
EchelonForm row_reduce_serial(const PrimeField& f, Matrix m);
/// Same result as row_reduce_serial; rows are eliminated in parallel per pivot.
EchelonForm row_reduce_parallel(const PrimeField& f, Matrix m);
/// Dispatches to the parallel kernel above a size threshold.
EchelonForm row_reduce(const PrimeField& f, Matrix m);

std::size_t rank(const PrimeField& f, const Matrix& m);
/// Columns form a basis of {x : m x = 0}.
Matrix nullspace(const PrimeField& f, const Matrix& m);
/// Columns of m forming a basis of its column space (first independent ones).
Matrix column_basis(const PrimeField& f, const Matrix& m);
/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const PrimeField& f, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a);
bool is_invertible(const PrimeField& f, const Matrix& a);

/// Indices of standard basis vectors completing the column space of `basis`
/// to the full space F^{basis.rows()}.
std::vector<std::size_t> complement_indices(const PrimeField& f, const Matrix& basis);

/// Matrix power by repeated squaring.
Matrix power(const PrimeField& f, const Matrix& a, std::uint64_t e);

}  // namespace gfan
