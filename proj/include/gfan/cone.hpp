#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace gfan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;

QVector to_rational(const std::vector<int>& v);
QVector to_rational(const std::vector<long long>& v);
Rational dot(const QVector& a, const QVector& b);
/// Scaled to a primitive integer vector (same direction); zero stays zero.
QVector primitive(const QVector& v);
std::string format_vector(const QVector& v);

/// A closed polyhedral cone given by generators, with its extreme rays and
/// facets computed by double description on the linear span.
class RationalCone {
 public:
  RationalCone() = default;
  RationalCone(std::size_t ambient, std::vector<QVector> generators);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<QVector>& generators() const noexcept { return generators_; }
  /// Primitive extreme rays, sorted. A cone containing lines reports a
  /// basis of its lineality space in both signs together with its extreme
  /// rays modulo that space.
  const std::vector<QVector>& rays() const noexcept { return rays_; }
  /// Primitive inward normals; facet f means f . v >= 0 on the cone.
  const std::vector<QVector>& facets() const noexcept { return facets_; }
  /// Linear forms cutting out the span.
  const std::vector<QVector>& equations() const noexcept { return equations_; }
  const std::vector<QVector>& lineality() const noexcept { return lineality_; }
  std::size_t span_dim() const noexcept { return span_basis_.size(); }
  bool is_pointed() const noexcept { return lineality_.empty(); }

  bool in_span(const QVector& v) const;
  bool contains(const QVector& v) const;
  bool in_relative_interior(const QVector& v) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<QVector> generators_;
  std::vector<QVector> span_basis_;  // reduced row echelon rows
  std::vector<std::size_t> pivots_;
  std::vector<QVector> equations_;
  std::vector<QVector> facets_;
  std::vector<QVector> lineality_;
  std::vector<QVector> rays_;
};

RationalCone cone_from_generators(std::size_t ambient, const std::vector<QVector>& generators);
RationalCone cone_from_generators(const std::vector<std::vector<int>>& generators);
bool equal_cones(const RationalCone& a, const RationalCone& b);
bool is_simplicial(const RationalCone& c);
std::size_t span_dimension(const RationalCone& c);
/// Every proper face, smallest first; their relative interiors partition the
/// relative boundary.
std::vector<RationalCone> boundary_faces(const RationalCone& c);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

/// Membership of many points, evaluated in parallel.
std::vector<bool> contains_all(const RationalCone& c, const std::vector<QVector>& points);
std::vector<bool> contains_all_serial(const RationalCone& c, const std::vector<QVector>& points);

}  // namespace gfan
