#pragma once

#include <cstdint>
#include <vector>

#include "gfan/algebra.hpp"
#include "gfan/matrix.hpp"
#include "gfan/representation.hpp"

namespace gfan {

using GVector = std::vector<int>;

/// A morphism between direct sums of indecomposable projectives
///   sum_c P_{cols[c]} -> sum_r P_{rows[r]},
/// stored as a matrix of algebra elements. Entry (r, c) lies in
/// e_{rows[r]} Lambda e_{cols[c]} and is the image of the generator of the
/// c-th source summand in the r-th target summand. Composition g o f is the
/// matrix product G F with the path product.
class LambdaMatrix {
 public:
  LambdaMatrix() = default;
  LambdaMatrix(std::vector<int> rows, std::vector<int> cols, std::size_t algebra_dim);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  const std::vector<int>& row_vertices() const noexcept { return rows_; }
  const std::vector<int>& col_vertices() const noexcept { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return entries_[r * cols_.size() + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }

  bool is_zero() const;
  bool operator==(const LambdaMatrix&) const = default;

  LambdaMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<Element> entries_;
};

LambdaMatrix lambda_multiply(const Algebra& alg, const LambdaMatrix& g, const LambdaMatrix& f);
LambdaMatrix lambda_add(const Algebra& alg, const LambdaMatrix& a, const LambdaMatrix& b);
LambdaMatrix lambda_scale(const Algebra& alg, const LambdaMatrix& a, Scalar s);
LambdaMatrix lambda_identity(const Algebra& alg, const std::vector<int>& vertices);
/// Block matrix [[a, 0], [0, b]].
LambdaMatrix lambda_block_diagonal(const Algebra& alg, const LambdaMatrix& a, const LambdaMatrix& b);

/// Coordinates of a Lambda-matrix shape in the path bases of its blocks.
class BlockSpace {
 public:
  BlockSpace(const Algebra& alg, std::vector<int> rows, std::vector<int> cols);
  std::size_t size() const noexcept { return offsets_.back(); }
  std::size_t offset(std::size_t r, std::size_t c) const { return offsets_[r * cols_.size() + c]; }
  std::size_t block_size(std::size_t r, std::size_t c) const { return offset_end(r, c) - offset(r, c); }
  const std::vector<int>& rows() const noexcept { return rows_; }
  const std::vector<int>& cols() const noexcept { return cols_; }

  std::vector<Scalar> coords(const LambdaMatrix& m) const;
  LambdaMatrix from_coords(const std::vector<Scalar>& x) const;
  LambdaMatrix from_column(const Matrix& m, std::size_t col) const;
  /// Which (row, col, basis path) a coordinate refers to.
  struct Slot {
    std::size_t row, col, path;
  };
  Slot slot(std::size_t k) const { return slots_[k]; }

 private:
  std::size_t offset_end(std::size_t r, std::size_t c) const { return offsets_[r * cols_.size() + c + 1]; }
  const Algebra* alg_;
  std::vector<int> rows_, cols_;
  std::vector<std::size_t> offsets_;
  std::vector<Slot> slots_;
};

/// A morphism P^{-1} -> P^0 of projectives, viewed as a complex in degrees -1, 0.
struct TwoTermPresentation {
  std::vector<int> minus;  // summand vertices of P^{-1}
  std::vector<int> plus;   // summand vertices of P^0
  LambdaMatrix map;        // rows: plus, cols: minus

  GVector g_vector(int n) const;
  std::size_t summand_count() const { return minus.size() + plus.size(); }
};

TwoTermPresentation zero_presentation(const Algebra& alg, const std::vector<int>& minus, const std::vector<int>& plus);
TwoTermPresentation direct_sum(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b);
bool is_contractible_free(const Algebra& alg, const TwoTermPresentation& p);

/// The module map sum P_{cols} -> sum P_{rows}.
ModuleMorphism to_module_morphism(const Algebra& alg, const LambdaMatrix& m);
/// Inverse of to_module_morphism; throws NotProjective if f is not a map
/// between the stated projective sums.
LambdaMatrix from_module_morphism(const Algebra& alg, const ModuleMorphism& f, const std::vector<int>& source_vertices,
                                  const std::vector<int>& target_vertices);
/// A vector of (sum_r P_{rows[r]}) at vertex w as a column of algebra elements.
std::vector<Element> vector_to_column(const Algebra& alg, const std::vector<int>& rows, int w, const std::vector<Scalar>& v);

/// Nakayama functor on a map between projectives: sum I_{cols} -> sum I_{rows}.
ModuleMorphism nakayama(const Algebra& alg, const LambdaMatrix& m);

Representation presentation_cokernel(const Algebra& alg, const TwoTermPresentation& p);
Representation presentation_ker_nu(const Algebra& alg, const TwoTermPresentation& p);

TwoTermPresentation minimal_presentation(const Algebra& alg, const Representation& m);
GVector g_vector(const Algebra& alg, const Representation& m);
Representation tau(const Algebra& alg, const Representation& m);
/// Linear dual, a representation of the opposite algebra.
Representation dual(const Representation& m);
Representation tau_inverse(const Algebra& alg, const Algebra& opposite, const Representation& m);

/// Removes contractible summands P -(unit)-> P by Gaussian elimination.
TwoTermPresentation strip_contractible(const Algebra& alg, const TwoTermPresentation& p);

/// Inverse of a unit u in e_v Lambda e_v.
Element local_unit_inverse(const Algebra& alg, int v, const Element& u);

/// Linear system of chain maps a -> b. Unknowns: coordinates of F1 in
/// BlockSpace(b.minus, a.minus) followed by F0 in BlockSpace(b.plus, a.plus);
/// rows: coordinates of F0 d_a - d_b F1 in BlockSpace(b.plus, a.minus).
struct ChainSystem {
  BlockSpace f1, f0, residual;
  Matrix matrix;
};
ChainSystem chain_system(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b);

struct ChainMap {
  LambdaMatrix f1;  // b.minus x a.minus
  LambdaMatrix f0;  // b.plus x a.plus
};

std::vector<ChainMap> chain_maps(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b);
/// Representatives of a basis of Hom in the homotopy category.
std::vector<ChainMap> homotopy_hom(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b);
std::size_t homotopy_hom_dim(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b);

/// dim Hom(a, b[1]) in the homotopy category.
std::size_t e_invariant(const Algebra& alg, const TwoTermPresentation& a, const TwoTermPresentation& b);

/// Number of unknowns in the chain-map system a -> b; used as a cost estimate.
std::size_t chain_unknowns(const Algebra& alg, const std::vector<int>& a_minus, const std::vector<int>& a_plus,
                           const std::vector<int>& b_minus, const std::vector<int>& b_plus);

}  // namespace gfan
