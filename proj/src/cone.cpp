#include "gfan/cone.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "gfan/error.hpp"

namespace gfan {

QVector to_rational(const std::vector<int>& v) { return QVector(v.begin(), v.end()); }
QVector to_rational(const std::vector<long long>& v) { return QVector(v.begin(), v.end()); }

Rational dot(const QVector& a, const QVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

QVector primitive(const QVector& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v)
    if (x != 0) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  std::vector<Integer> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) return v;
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(w[i] / g);
  return out;
}

std::string format_vector(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s + ")";
}

namespace {

QVector axpy(const QVector& y, const Rational& a, const QVector& x) {
  QVector out = y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out[i] += a * x[i];
  return out;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c] != 0) rows[i] = axpy(rows[i], -rows[i][c], rows[r]);
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : rows . x = 0}.
std::vector<QVector> kernel(std::vector<QVector> rows, std::size_t width) {
  auto pivots = rref(rows, width);
  std::vector<bool> is_pivot(width, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> out;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    QVector v(width, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    out.push_back(v);
  }
  return out;
}

struct DoubleDescription {
  std::vector<QVector> lineality;
  std::vector<QVector> rays;
};

// {x in Q^d : a . x >= 0 for a in constraints} by the double description
// method, with the lineality space tracked separately.
DoubleDescription double_description(std::size_t d, const std::vector<QVector>& constraints) {
  DoubleDescription dd;
  for (std::size_t i = 0; i < d; ++i) {
    QVector e(d, 0);
    e[i] = 1;
    dd.lineality.push_back(e);
  }
  // Constraint indices tight at each ray.
  std::vector<std::set<std::size_t>> tight;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& a = constraints[k];
    auto pick = std::find_if(dd.lineality.begin(), dd.lineality.end(), [&](const QVector& l) { return dot(a, l) != 0; });
    if (pick != dd.lineality.end()) {
      QVector l0 = *pick;
      dd.lineality.erase(pick);
      Rational s = dot(a, l0);
      if (s < 0) {
        for (auto& x : l0) x = -x;
        s = -s;
      }
      for (auto& l : dd.lineality) l = axpy(l, -dot(a, l) / s, l0);
      for (std::size_t r = 0; r < dd.rays.size(); ++r) {
        dd.rays[r] = axpy(dd.rays[r], -dot(a, dd.rays[r]) / s, l0);
        tight[r].insert(k);
      }
      // l0 is tight at every earlier constraint (those vanish on lineality).
      std::set<std::size_t> t;
      for (std::size_t j = 0; j < k; ++j) t.insert(j);
      dd.rays.push_back(l0);
      tight.push_back(t);
      continue;
    }
    std::vector<std::size_t> pos, neg, zero;
    std::vector<Rational> val(dd.rays.size());
    for (std::size_t r = 0; r < dd.rays.size(); ++r) {
      val[r] = dot(a, dd.rays[r]);
      (val[r] > 0 ? pos : val[r] < 0 ? neg : zero).push_back(r);
    }
    std::vector<QVector> next;
    std::vector<std::set<std::size_t>> next_tight;
    for (auto r : pos) next.push_back(dd.rays[r]), next_tight.push_back(tight[r]);
    for (auto r : zero) {
      next.push_back(dd.rays[r]);
      auto t = tight[r];
      t.insert(k);
      next_tight.push_back(t);
    }
    for (auto p : pos)
      for (auto n : neg) {
        std::set<std::size_t> common;
        std::set_intersection(tight[p].begin(), tight[p].end(), tight[n].begin(), tight[n].end(),
                              std::inserter(common, common.end()));
        bool adjacent = true;
        for (std::size_t r = 0; r < dd.rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (std::includes(tight[r].begin(), tight[r].end(), common.begin(), common.end())) adjacent = false;
        }
        if (!adjacent) continue;
        QVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = val[p] * dd.rays[n][i] - val[n] * dd.rays[p][i];
        common.insert(k);
        next.push_back(primitive(v));
        next_tight.push_back(common);
      }
    dd.rays = std::move(next);
    tight = std::move(next_tight);
  }
  for (auto& r : dd.rays) r = primitive(r);
  return dd;
}

// Orthogonal projection away from span(basis) (basis need not be orthogonal).
QVector project_out(const QVector& v, const std::vector<QVector>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  // Solve Gram c = B v.
  std::vector<QVector> aug(k, QVector(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = dot(basis[i], basis[j]);
    aug[i][k] = dot(basis[i], v);
  }
  rref(aug, k);
  QVector out = v;
  for (std::size_t i = 0; i < k; ++i) out = axpy(out, -aug[i][k], basis[i]);
  return out;
}

void sort_unique(std::vector<QVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

RationalCone::RationalCone(std::size_t ambient, std::vector<QVector> generators)
    : ambient_(ambient), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != ambient_) throw Error(ErrorCode::InvalidArgument, "generator length mismatch");
  span_basis_ = generators_;
  pivots_ = rref(span_basis_, ambient_);
  equations_ = kernel(span_basis_, ambient_);
  for (auto& e : equations_) e = primitive(e);
  const std::size_t d = span_basis_.size();
  if (d == 0) return;

  // In span coordinates y (y_k = v[pivot_k]) the cone is full-dimensional;
  // its facets are the extreme rays of the dual cone.
  std::vector<QVector> coords;
  for (const auto& g : generators_) {
    QVector y(d);
    for (std::size_t k = 0; k < d; ++k) y[k] = g[pivots_[k]];
    if (!is_zero(y)) coords.push_back(y);
  }
  auto dual = double_description(d, coords);
  assert(dual.lineality.empty());
  for (const auto& f : dual.rays) {
    QVector amb(ambient_, 0);
    for (std::size_t k = 0; k < d; ++k) amb[pivots_[k]] = f[k];
    facets_.push_back(primitive(amb));
  }
  sort_unique(facets_);

  std::vector<QVector> facet_coords;
  for (const auto& f : dual.rays) facet_coords.push_back(f);
  auto primal = double_description(d, facet_coords);
  auto lift = [&](const QVector& y) {
    QVector v(ambient_, 0);
    for (std::size_t k = 0; k < d; ++k) v = axpy(v, y[k], span_basis_[k]);
    return primitive(v);
  };
  for (const auto& l : primal.lineality) lineality_.push_back(lift(l));
  for (const auto& r : primal.rays) {
    QVector v = primitive(project_out(lift(r), lineality_));
    if (!is_zero(v)) rays_.push_back(v);
  }
  for (const auto& l : lineality_) {
    rays_.push_back(l);
    QVector m = l;
    for (auto& x : m) x = -x;
    rays_.push_back(m);
  }
  sort_unique(rays_);
}

bool RationalCone::in_span(const QVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  return std::all_of(equations_.begin(), equations_.end(), [&](const QVector& e) { return dot(e, v) == 0; });
}

bool RationalCone::contains(const QVector& v) const {
  return in_span(v) && std::all_of(facets_.begin(), facets_.end(), [&](const QVector& f) { return dot(f, v) >= 0; });
}

bool RationalCone::in_relative_interior(const QVector& v) const {
  return in_span(v) && std::all_of(facets_.begin(), facets_.end(), [&](const QVector& f) { return dot(f, v) > 0; });
}

RationalCone cone_from_generators(std::size_t ambient, const std::vector<QVector>& generators) {
  return RationalCone(ambient, generators);
}

RationalCone cone_from_generators(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "ambient dimension unknown for an empty list");
  std::vector<QVector> q;
  for (const auto& g : generators) q.push_back(to_rational(g));
  return RationalCone(generators.front().size(), q);
}

bool equal_cones(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  auto inside = [](const RationalCone& x, const RationalCone& y) {
    return std::all_of(x.generators().begin(), x.generators().end(), [&](const QVector& g) { return y.contains(g); });
  };
  return inside(a, b) && inside(b, a);
}

bool is_simplicial(const RationalCone& c) { return c.is_pointed() && c.rays().size() == c.span_dim(); }

std::size_t span_dimension(const RationalCone& c) { return c.span_dim(); }

std::vector<RationalCone> boundary_faces(const RationalCone& c) {
  const auto& facets = c.facets();
  std::vector<QVector> pointed_rays;
  for (const auto& r : c.rays()) {
    bool in_lineality = std::all_of(facets.begin(), facets.end(), [&](const QVector& f) { return dot(f, r) == 0; });
    if (!in_lineality) pointed_rays.push_back(r);
  }
  // A face is identified by the set of facets containing it.
  auto rays_on = [&](const std::set<std::size_t>& s) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < pointed_rays.size(); ++r)
      if (std::all_of(s.begin(), s.end(), [&](std::size_t f) { return dot(facets[f], pointed_rays[r]) == 0; }))
        out.push_back(r);
    return out;
  };
  auto closure = [&](const std::set<std::size_t>& s) {
    auto rs = rays_on(s);
    std::set<std::size_t> out;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (std::all_of(rs.begin(), rs.end(), [&](std::size_t r) { return dot(facets[f], pointed_rays[r]) == 0; }))
        out.insert(f);
    return out;
  };
  std::set<std::set<std::size_t>> seen;
  std::vector<std::set<std::size_t>> queue;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    auto s = closure({f});
    if (seen.insert(s).second) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (queue[i].count(f)) continue;
      auto s = queue[i];
      s.insert(f);
      s = closure(s);
      if (seen.insert(s).second) queue.push_back(s);
    }
  std::vector<std::pair<std::size_t, RationalCone>> faces;
  for (const auto& s : queue) {
    std::vector<QVector> gens;
    for (auto r : rays_on(s)) gens.push_back(pointed_rays[r]);
    for (const auto& l : c.lineality()) {
      gens.push_back(l);
      QVector m = l;
      for (auto& x : m) x = -x;
      gens.push_back(m);
    }
    RationalCone face(c.ambient_dim(), gens);
    faces.emplace_back(face.span_dim(), face);
  }
  std::stable_sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<RationalCone> out;
  for (auto& f : faces) out.push_back(std::move(f.second));
  return out;
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::InvalidArgument, "ambient dimensions differ");
  std::vector<QVector> constraints;
  for (const auto* c : {&a, &b}) {
    constraints.insert(constraints.end(), c->facets().begin(), c->facets().end());
    for (const auto& e : c->equations()) {
      constraints.push_back(e);
      QVector m = e;
      for (auto& x : m) x = -x;
      constraints.push_back(m);
    }
  }
  auto dd = double_description(a.ambient_dim(), constraints);
  std::vector<QVector> gens = dd.rays;
  for (const auto& l : dd.lineality) {
    gens.push_back(l);
    QVector m = l;
    for (auto& x : m) x = -x;
    gens.push_back(m);
  }
  return RationalCone(a.ambient_dim(), gens);
}

std::vector<bool> contains_all(const RationalCone& c, const std::vector<QVector>& points) {
  std::vector<char> hit(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < points.size(); ++i) hit[i] = c.contains(points[i]);
  return std::vector<bool>(hit.begin(), hit.end());
}

std::vector<bool> contains_all_serial(const RationalCone& c, const std::vector<QVector>& points) {
  std::vector<bool> out;
  for (const auto& p : points) out.push_back(c.contains(p));
  return out;
}

}  // namespace gfan
