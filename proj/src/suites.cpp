#include "gfan/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gfan/error.hpp"
#include "gfan/tau_tilting.hpp"

namespace gfan {

std::vector<GVector> sample_g_vectors(int n, std::size_t count, int lo, int hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(lo, hi);
  std::vector<GVector> out(count, GVector(n));
  for (auto& g : out)
    for (auto& x : g) x = entry(rng);
  return out;
}

namespace {

bool is_primitive_integer(const QVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (denominator(x) != 1) return false;
    g = boost::multiprecision::gcd(g, Integer(abs(numerator(x))));
  }
  return g == 1;
}

QVector scaled(const QVector& v, const Rational& t) {
  QVector out = v;
  for (auto& x : out) x *= t;
  return out;
}

QVector add(const QVector& a, const QVector& b) {
  QVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

SuiteResult check_decompositions(const Algebra& alg, const std::vector<GVector>& gs, const EngineOptions& opt) {
  SuiteResult r;
  r.name = "decomposition";
  for (const auto& g : gs) {
    auto d = generic_decomposition(alg, g, opt);
    GVector sum(g.size(), 0);
    for (const auto& [h, m] : d.summands)
      for (std::size_t i = 0; i < g.size(); ++i) sum[i] += m * h[i];
    ++r.checks;
    if (sum != g) r.violations.push_back("summands of " + format_g(g) + " add up to " + format_g(sum));
    for (std::size_t i = 0; i < d.summands.size(); ++i)
      for (std::size_t j = i + 1; j < d.summands.size(); ++j) {
        ++r.checks;
        if (!generically_e_orthogonal(alg, d.summands[i].first, d.summands[j].first, opt.seed))
          r.violations.push_back("summands " + format_g(d.summands[i].first) + " and " +
                                 format_g(d.summands[j].first) + " of " + format_g(g) + " are not E-orthogonal");
      }
    for (const auto& a : d.anomalies) r.notes.push_back(format_g(g) + ": " + a);
  }
  return r;
}

SuiteResult check_cones(const Algebra& alg, const std::vector<GVector>& gs, const ProbeOptions& opt,
                        double min_stable) {
  SuiteResult r;
  r.name = "cones";
  std::size_t stable = 0;
  for (const auto& g : gs) {
    auto c = cone_of_multiples(alg, g, opt);
    ++r.checks;
    if (c.inclusion_violations > 0)
      r.violations.push_back(format_g(g) + ": cone of a multiple not inside the cone of a larger multiple");
    if (!c.stabilized_at) continue;
    ++stable;
    const auto& cone = c.union_cone;
    if (!cone.is_pointed() || !is_simplicial(cone))
      r.violations.push_back(format_g(g) + ": stabilized cone is not simplicial");
    for (const auto& ray : cone.rays())
      if (!is_primitive_integer(ray)) r.violations.push_back(format_g(g) + ": ray " + format_vector(ray));
  }
  const double rate = gs.empty() ? 1.0 : static_cast<double>(stable) / gs.size();
  r.notes.push_back("stabilized " + std::to_string(stable) + "/" + std::to_string(gs.size()));
  if (rate < min_stable) r.violations.push_back("stabilization rate " + std::to_string(rate) + " below target");
  return r;
}

SuiteResult check_reduced(const Algebra& alg, const std::vector<GVector>& gs, const ProbeOptions& opt) {
  SuiteResult r;
  r.name = "reduced";
  for (const auto& g : gs) {
    auto red = reduced_version(alg, g, opt);
    std::vector<QVector> members;
    for (const auto& h : ind_set(alg, red.g, opt.engine)) members.push_back(to_rational(h));
    ++r.checks;
    if (rational_rank(members) != members.size())
      r.violations.push_back(format_g(g) + " reduces to " + format_g(red.g) + " with dependent summands");
    if (!red.cones_agree) r.violations.push_back(format_g(g) + ": reduction changed the cone");
  }
  return r;
}

SuiteResult check_fan(const Algebra& alg, std::size_t max_pairs, int max_depth, std::uint64_t seed) {
  SuiteResult r;
  r.name = "fan";
  const int n = alg.vertex_count();
  auto e = enumerate_tau_tilting(alg, max_pairs, max_depth, seed);
  r.notes.push_back(std::to_string(e.pairs.size()) + " pairs" + (e.complete ? " (complete)" : " (truncated)"));
  std::vector<int> degree(e.pairs.size(), 0);
  for (const auto& [a, b] : e.edges) ++degree[a], ++degree[b];
  for (std::size_t i = 0; i < e.pairs.size(); ++i) {
    ++r.checks;
    if (!is_tau_rigid_pair(alg, e.pairs[i])) r.violations.push_back("pair " + std::to_string(i) + " is not tau-rigid");
    if (e.complete && degree[i] != n)
      r.violations.push_back("pair " + std::to_string(i) + " has " + std::to_string(degree[i]) + " exchanges");
  }
  auto fan = chamber_fan(alg, e);
  for (const auto& c : fan.chambers) {
    ++r.checks;
    if (!is_simplicial(c) || static_cast<int>(c.span_dim()) != n) r.violations.push_back("chamber not simplicial");
  }
  if (e.complete) {
    double cover = fan_covering_check(fan, 1000, seed);
    ++r.checks;
    r.notes.push_back("covering " + std::to_string(cover));
    if (cover != 1.0) r.violations.push_back("complete fan covers only " + std::to_string(cover));
  }
  return r;
}

SuiteResult check_torsion_axioms(const ModuleCatalog& catalog, std::size_t n_theta, std::uint64_t seed) {
  SuiteResult r;
  r.name = "torsion";
  const int n = catalog.twin.vertex_count();
  const std::size_t m = catalog.members.size();
  std::vector<char> has_hom(m * m);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < m * m; ++k)
    has_hom[k] = hom_dim(catalog.twin, catalog.members[k / m].module, catalog.members[k % m].module) > 0;

  std::mt19937_64 rng(seed);
  auto random_theta = [&] {
    QVector t(n);
    for (auto& x : t) x = Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
    return t;
  };
  std::vector<QVector> thetas;
  for (std::size_t k = 0; k < n_theta; ++k) thetas.push_back(random_theta());
  auto sigs = signatures_for(thetas, catalog);
  std::size_t segments = 0;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    const auto& theta = thetas[k];
    const auto& sig = sigs[k];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        ++r.checks;
        if (!has_hom[i * m + j]) continue;
        if (sig.flags[i].t_bar && sig.flags[j].f)
          r.violations.push_back("Hom(member " + std::to_string(i) + ", member " + std::to_string(j) +
                                 ") nonzero at theta " + format_vector(theta));
        if (sig.flags[i].t && sig.flags[j].f_bar)
          r.violations.push_back("Hom(T member " + std::to_string(i) + ", Fbar member " + std::to_string(j) +
                                 ") nonzero at theta " + format_vector(theta));
      }
    for (int t : {2, 3, 7}) {
      ++r.checks;
      if (tf_signature(scaled(theta, t), catalog).flags != sig.flags)
        r.violations.push_back("signature changes under scaling by " + std::to_string(t) + " at " +
                               format_vector(theta));
    }
    // A nearby point and a positive multiple give indistinguishable partners often enough.
    for (const QVector& eta : {add(scaled(theta, 2), QVector(n, Rational(1, 97))), scaled(theta, Rational(5, 2)),
                               thetas[(k + 1) % thetas.size()]}) {
      if (tf_signature(eta, catalog).defining() != sig.defining()) continue;
      ++segments;
      for (int s = 1; s <= 16; ++s) {
        Rational a(s, 17);
        QVector p = add(scaled(theta, 1 - a), scaled(eta, a));
        ++r.checks;
        if (tf_signature(p, catalog).defining() != sig.defining())
          r.violations.push_back("segment from " + format_vector(theta) + " to " + format_vector(eta) +
                                 " leaves the class at " + format_vector(p));
      }
    }
  }
  r.notes.push_back(std::to_string(segments) + " indistinguishable segments");
  return r;
}

SuiteResult check_open_cone_classes(const Algebra& alg, const ModuleCatalog& catalog, const std::vector<GVector>& gs,
                                    std::uint64_t seed, const ProbeOptions& opt) {
  SuiteResult r;
  r.name = "open-cones";
  std::mt19937_64 rng(seed);
  const std::size_t n = alg.vertex_count();
  std::size_t same_set_pairs = 0;
  for (const auto& g : gs) {
    auto summands = ind_set(alg, g, opt.engine);
    if (summands.empty()) continue;
    std::vector<QVector> gens;
    for (const auto& h : summands) gens.push_back(to_rational(h));
    RationalCone open_cone(n, gens);
    QVector theta = to_rational(g);
    for (const auto& p : interior_points(open_cone, 8, rng)) {
      ++r.checks;
      auto probe = tf_equivalent_probe(theta, p, catalog);
      if (probe.distinguished)
        r.violations.push_back(format_g(g) + " vs interior point " + format_vector(p) + ": " + probe.reason);
    }
    // Positive integer recombinations with the same summand set.
    for (int k = 0; k < 2; ++k) {
      GVector h(n, 0);
      for (const auto& s : summands) {
        int c = 1 + static_cast<int>(rng() % 3);
        for (std::size_t i = 0; i < n; ++i) h[i] += c * s[i];
      }
      if (ind_set(alg, h, opt.engine) != summands) continue;
      ++same_set_pairs;
      ++r.checks;
      auto probe = tf_equivalent_probe(theta, to_rational(h), catalog);
      if (probe.distinguished)
        r.violations.push_back(format_g(g) + " vs " + format_g(h) + " with equal summand sets: " + probe.reason);
    }
  }
  r.notes.push_back(std::to_string(same_set_pairs) + " pairs with equal summand sets");
  return r;
}

SuiteResult check_tame_probe(const Algebra& alg, const ModuleCatalog& catalog, const std::vector<GVector>& gs,
                             bool gate_boundary, std::uint64_t seed, const ProbeOptions& opt) {
  SuiteResult r;
  r.name = "tame-probe";
  std::size_t tame = 0, boundary_total = 0, boundary_missed = 0;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const auto& g = gs[k];
    if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) continue;
    if (!is_tame(alg, g, opt.engine)) continue;
    ++tame;
    auto p = interior_membership_probe(alg, catalog, g, 32, seed + k, opt);
    r.checks += p.interior.size() + p.boundary.size();
    for (const auto& s : p.interior)
      if (s.witness)
        r.violations.push_back(format_g(g) + ": interior point " + format_vector(s.point) + " split by member " +
                               std::to_string(*s.witness));
    boundary_total += p.boundary.size();
    for (const auto& s : p.boundary) {
      if (s.witness) continue;
      ++boundary_missed;
      std::string msg = format_g(g) + ": boundary point " + format_vector(s.point) + " has no witness";
      if (gate_boundary)
        r.violations.push_back(msg);
      else if (boundary_missed <= 5)
        r.notes.push_back(msg);
    }
  }
  r.notes.push_back(std::to_string(tame) + " tame vectors, boundary points with witness " +
                    std::to_string(boundary_total - boundary_missed) + "/" + std::to_string(boundary_total));
  return r;
}

}  // namespace gfan
