#include "gfan/tf_probe.hpp"

#include <algorithm>
#include <random>

#include "gfan/error.hpp"

namespace gfan {

std::vector<int> multiplier_ladder(int t_max) {
  std::vector<int> out;
  for (int t : {1, 2, 3, 4, 5, 6, 8, 12, 24})
    if (t <= t_max) out.push_back(t);
  return out;
}

namespace {

RationalCone cone_of(std::size_t n, const GMultiset& m) {
  std::vector<QVector> gens;
  for (const auto& [h, k] : m) gens.push_back(to_rational(h));
  return RationalCone(n, gens);
}

GVector scaled(const GVector& g, int t) {
  GVector out = g;
  for (auto& x : out) x *= t;
  return out;
}

}  // namespace

ConeOfMultiples cone_of_multiples(const Algebra& alg, const GVector& g, const ProbeOptions& opt) {
  const std::size_t n = alg.vertex_count();
  ConeOfMultiples out;
  out.g = g;
  auto base = generic_decomposition(alg, g, opt.engine).summands;
  std::vector<bool> tame(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) tame[i] = is_tame(alg, base[i].first, opt.engine);

  auto ladder = multiplier_ladder(opt.t_max);
  std::vector<std::optional<GMultiset>> results(ladder.size());
  std::vector<std::optional<Error>> errors(ladder.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    try {
      GMultiset acc;
      bool ok = true;
      for (std::size_t i = 0; i < base.size() && ok; ++i) {
        const auto& [h, mult] = base[i];
        const int factor = ladder[k] * mult;
        if (tame[i]) {
          acc = union_multiset(acc, {{h, factor}});
          continue;
        }
        GVector big = scaled(h, factor);
        if (factor > 1 && decomposition_cost(alg, big) > opt.engine.budget) {
          ok = false;
          continue;
        }
        acc = union_multiset(acc, generic_decomposition(alg, big, opt.engine).summands);
      }
      if (ok) results[k] = acc;
    } catch (const Error& e) {
      errors[k] = e;
    }
  }
  for (auto& e : errors)
    if (e) throw *e;

  std::vector<QVector> all;
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (!results[k]) {
      out.skipped.push_back(ladder[k]);
      continue;
    }
    out.per_t[ladder[k]] = *results[k];
    for (const auto& [h, m] : *results[k]) all.push_back(to_rational(h));
  }
  out.union_cone = RationalCone(n, all);
  for (const auto& [t, m] : out.per_t) {
    auto c = cone_of(n, m);
    bool covers = std::all_of(all.begin(), all.end(), [&](const QVector& v) { return c.contains(v); });
    if (covers) {
      out.stabilized_at = t;
      break;
    }
  }
  for (const auto& [t, m] : out.per_t)
    for (const auto& [t2, m2] : out.per_t) {
      if (t2 % t != 0 || t2 == t) continue;
      auto big = cone_of(n, m2);
      for (const auto& [h, k] : m)
        if (!big.contains(to_rational(h))) ++out.inclusion_violations;
    }
  return out;
}

bool ray_condition_proxy(const ConeOfMultiples& c) {
  const auto& rays = c.union_cone.rays();
  for (const auto& [t, m] : c.per_t) {
    std::vector<int> hits(rays.size(), 0);
    for (const auto& [h, k] : m) {
      auto p = primitive(to_rational(h));
      auto it = std::find(rays.begin(), rays.end(), p);
      if (it == rays.end()) return false;
      ++hits[it - rays.begin()];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int x) { return x != 1; })) return false;
  }
  return true;
}

bool ray_condition_proxy(const Algebra& alg, const GVector& g, const ProbeOptions& opt) {
  return ray_condition_proxy(cone_of_multiples(alg, g, opt));
}

namespace {

GVector minus(const GVector& a, const GVector& b) {
  GVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

// First summand h of g lying in the cone of multiples of g - h.
std::optional<GVector> redundant_summand(const Algebra& alg, const GVector& g, const ProbeOptions& opt) {
  for (const auto& h : ind_set(alg, g, opt.engine)) {
    auto rest = minus(g, h);
    if (cone_of_multiples(alg, rest, opt).union_cone.contains(to_rational(h))) return h;
  }
  return std::nullopt;
}

}  // namespace

bool is_reduced(const Algebra& alg, const GVector& g, const ProbeOptions& opt) {
  return !redundant_summand(alg, g, opt);
}

ReducedVersion reduced_version(const Algebra& alg, const GVector& g, const ProbeOptions& opt) {
  ReducedVersion out{g, false};
  while (auto h = redundant_summand(alg, out.g, opt)) out.g = minus(out.g, *h);
  out.cones_agree =
      equal_cones(cone_of_multiples(alg, out.g, opt).union_cone, cone_of_multiples(alg, g, opt).union_cone);
  return out;
}

GVector tame_part(const Algebra& alg, const GVector& g, const ProbeOptions& opt) {
  auto c = cone_of_multiples(alg, g, opt);
  std::set<GVector> members;
  for (const auto& [t, m] : c.per_t)
    for (const auto& [h, k] : m) members.insert(h);
  GVector out(g.size(), 0);
  for (const auto& h : members)
    if (is_tame(alg, h, opt.engine))
      for (std::size_t i = 0; i < h.size(); ++i) out[i] += h[i];
  return out;
}

DimensionReport dimension_report(const Algebra& alg, const ModuleCatalog& catalog, const GVector& g,
                                 const std::vector<GVector>& grid, const ProbeOptions& opt) {
  const std::size_t n = alg.vertex_count();
  DimensionReport r;
  r.catalog_hash = catalog.hash;
  auto cone = cone_of_multiples(alg, g, opt).union_cone;
  r.cone_span = cone.span_dim();
  QVector theta = to_rational(g);
  auto base = tf_signature(theta, catalog).defining();
  std::vector<QVector> points;
  for (const auto& h : grid) points.push_back(to_rational(h));
  auto sigs = signatures_for(points, catalog);
  std::vector<QVector> same{theta};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sigs[i].defining() != base) continue;
    same.push_back(points[i]);
    if (!cone.in_relative_interior(points[i])) ++r.outside_interior;
  }
  r.class_span = rational_rank(same);
  r.class_kernel = n - r.class_span;
  r.w_estimate = w_space_estimate(theta, catalog).span;
  r.codimension_one = r.cone_span + 1 == n;
  return r;
}

std::size_t InteriorProbe::interior_distinguished() const {
  return std::count_if(interior.begin(), interior.end(), [](const MembershipSample& s) { return s.witness.has_value(); });
}

std::size_t InteriorProbe::boundary_indistinguished() const {
  return std::count_if(boundary.begin(), boundary.end(), [](const MembershipSample& s) { return !s.witness; });
}

std::vector<QVector> interior_points(const RationalCone& c, int count, std::mt19937_64& rng) {
  std::vector<QVector> out;
  for (int k = 0; k < count; ++k) {
    QVector p(c.ambient_dim(), 0);
    for (const auto& r : c.rays()) {
      Rational w(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3));
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += w * r[i];
    }
    out.push_back(p);
  }
  return out;
}

std::vector<QVector> boundary_points(const RationalCone& c, int count, std::mt19937_64& rng) {
  auto faces = boundary_faces(c);
  std::vector<QVector> out;
  if (faces.empty()) return out;
  for (int k = 0; k < count; ++k) {
    const auto& face = faces[rng() % faces.size()];
    auto p = interior_points(face, 1, rng);
    out.push_back(p[0]);
  }
  return out;
}

InteriorProbe interior_membership_probe(const Algebra& alg, const ModuleCatalog& catalog, const GVector& g,
                                        int n_points, std::uint64_t seed, const ProbeOptions& opt) {
  InteriorProbe out;
  auto cone = cone_of_multiples(alg, g, opt).union_cone;
  std::mt19937_64 rng(seed);
  QVector theta = to_rational(g);
  auto classify = [&](const std::vector<QVector>& pts, std::vector<MembershipSample>& into) {
    for (const auto& p : pts) into.push_back({p, tf_equivalent_probe(theta, p, catalog).witness});
  };
  classify(interior_points(cone, n_points, rng), out.interior);
  if (cone.span_dim() > 0) classify(boundary_points(cone, n_points, rng), out.boundary);
  auto tp = tame_part(alg, g, opt);
  out.tame_part_nonzero = std::any_of(tp.begin(), tp.end(), [](int x) { return x != 0; });
  return out;
}

}  // namespace gfan
