#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfan/field.hpp"

namespace gfan {

struct Arrow {
  std::string label;
  int source = 0;  // 0-based
  int target = 0;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  std::optional<int> arrow_index(std::string_view label) const;
};

/// Path composed left to right: the first listed arrow is traversed first.
/// An empty arrow list is the trivial path at `start`.
struct PathWord {
  int start = 0;
  std::vector<int> arrows;

  int end(const Quiver& q) const { return arrows.empty() ? start : q.arrows[arrows.back()].target; }
  std::size_t length() const { return arrows.size(); }
  bool operator==(const PathWord&) const = default;
};

struct RelationTerm {
  std::int64_t coefficient = 1;
  PathWord path;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

/// Parsed contents of an algebra file, before any rewriting.
struct AlgebraInput {
  Quiver quiver;
  std::vector<Relation> relations;
  std::uint32_t prime = 32003;
};

AlgebraInput parse_algebra(std::string_view text);
std::string format_algebra(const AlgebraInput& input);
std::string path_to_string(const Quiver& q, const PathWord& w);

/// Sparse linear combination of basis indices.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;
/// Dense coordinates in the path basis.
using Element = std::vector<Scalar>;

class Algebra {
 public:
  static constexpr int kDefaultLengthBound = 64;

  const PrimeField& field() const noexcept { return field_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  int length_bound() const noexcept { return length_bound_; }
  int vertex_count() const noexcept { return quiver_.vertex_count; }
  std::size_t dim() const noexcept { return basis_.size(); }

  const std::vector<PathWord>& basis() const noexcept { return basis_; }
  int source(std::size_t b) const { return basis_[b].start; }
  int target(std::size_t b) const { return basis_[b].end(quiver_); }
  std::size_t trivial(int v) const { return trivial_[v]; }
  std::size_t arrow_element(int a) const { return arrow_basis_[a]; }
  /// Basis indices of paths from u to v, in basis order.
  const std::vector<std::size_t>& paths(int u, int v) const { return between_[u * vertex_count() + v]; }
  /// Position of basis element b inside paths(source(b), target(b)).
  std::size_t local_index(std::size_t b) const { return local_[b]; }
  std::optional<std::size_t> find_basis(const PathWord& w) const;

  /// Product of two basis paths (zero when not composable).
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Element multiply(const Element& x, const Element& y) const;
  Element normal_form(const PathWord& w) const;
  Element zero() const { return Element(dim(), 0); }
  Element basis_element(std::size_t b) const;

  /// Rewriting rules lhs -> rhs, rhs in normal form and smaller than lhs.
  struct Rule {
    std::vector<int> lhs;
    std::map<std::vector<int>, Scalar> rhs;
  };
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  /// Same quiver and relations over another prime.
  Algebra with_prime(std::uint32_t p) const;
  /// Arrows and relation words reversed.
  Algebra opposite() const;
  AlgebraInput input() const;

  std::string describe(std::size_t b) const { return path_to_string(quiver_, basis_[b]); }

  friend Algebra build_algebra(const Quiver&, const std::vector<Relation>&, std::uint32_t, int);

 private:
  explicit Algebra(std::uint32_t p) : field_(p) {}

  PrimeField field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  int length_bound_ = kDefaultLengthBound;
  std::vector<Rule> rules_;
  std::vector<PathWord> basis_;
  std::map<std::pair<int, std::vector<int>>, std::size_t> index_;
  std::vector<std::size_t> trivial_;
  std::vector<std::size_t> arrow_basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> local_;
  std::vector<SparseVec> table_;
};

Algebra build_algebra(const Quiver& quiver, const std::vector<Relation>& relations, std::uint32_t prime,
                      int length_bound = Algebra::kDefaultLengthBound);
Algebra build_algebra(const AlgebraInput& input, int length_bound = Algebra::kDefaultLengthBound);

/// Stable 64-bit hash of the textual form, used for cache keys.
std::uint64_t algebra_hash(const Algebra& alg);

}  // namespace gfan
