// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "gfan/suites.hpp"
#include "gfan/tau_tilting.hpp"
#include "gfan/tf_probe.hpp"
#include "test_support.hpp"

using namespace gfan;
using gfan::testing::builtin;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

const std::vector<std::string> kAlgebras{"a2", "a3", "kronecker2", "cycle3"};

const ModuleCatalog& catalog_for(const std::string& name) {
  static std::map<std::string, ModuleCatalog> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    CatalogOptions o;
    o.dim_cap = 8;
    it = cache.emplace(name, build_catalog(builtin(name), o)).first;
  }
  return it->second;
}

std::vector<GVector> sample_for(const Algebra& alg) { return sample_g_vectors(alg.vertex_count(), 50, -3, 3, 20240601); }

std::string first_violation(const SuiteResult& r) { return r.violations.empty() ? "" : "; " + r.violations.front(); }

// Runs one suite per algebra and folds the results into a verdict.
Verdict over_algebras(const std::vector<std::string>& names, const std::function<SuiteResult(const std::string&)>& f) {
  bool pass = true;
  std::ostringstream s;
  std::string bad;
  for (const auto& n : names) {
    auto r = f(n);
    pass = pass && r.passed();
    if (s.tellp() > 0) s << "; ";
    s << n << ": " << r.checks << " checks, " << r.violations.size() << " violations";
    if (!r.notes.empty()) s << " (" << r.notes.back() << ")";
    if (bad.empty()) bad = first_violation(r);
  }
  return {pass, s.str() + bad};
}

struct Enumerated {
  TauTiltingEnumeration e;
  ChamberFan fan;
  double seconds;
};

const Enumerated& cycle_fan() {
  static const Enumerated v = [] {
    auto alg = builtin("cycle3");
    auto t0 = std::chrono::steady_clock::now();
    auto e = enumerate_tau_tilting(alg);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto fan = chamber_fan(alg, e);
    return Enumerated{std::move(e), std::move(fan), s};
  }();
  return v;
}

Verdict ac1() {
  const auto& v = cycle_fan();
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu pairs (%s) in %.2f s", v.e.pairs.size(), v.e.complete ? "complete" : "truncated",
                v.seconds);
  return {v.e.pairs.size() == 20 && v.e.complete && v.seconds < 120, buf};
}

Verdict ac2() {
  double f = fan_covering_check(cycle_fan().fan, 1000, 7);
  return {f == 1.0, "covering fraction " + std::to_string(f) + " over 1000 directions"};
}

Verdict ac3() {
  auto rays = fan_rays(cycle_fan().fan);
  std::set<QVector> have(rays.begin(), rays.end());
  std::string missing;
  for (const GVector& r : std::vector<GVector>{{0, 1, 0}, {-1, 0, 0}, {-1, 1, 0}, {0, 1, -1}, {1, 0, 0}})
    if (!have.count(to_rational(r))) missing += " " + format_g(r);
  return {missing.empty(), std::to_string(rays.size()) + " rays" + (missing.empty() ? ", figure rays present" : ", missing" + missing)};
}

Verdict ac4() {
  auto alg = builtin("a2");
  auto e = enumerate_tau_tilting(alg);
  auto rays = fan_rays(chamber_fan(alg, e));
  std::vector<QVector> want;
  for (const GVector& r : std::vector<GVector>{{1, 0}, {0, 1}, {1, -1}, {0, -1}, {-1, 0}}) want.push_back(to_rational(r));
  std::sort(want.begin(), want.end());
  bool ok = e.pairs.size() == 5 && e.complete && rays == want;
  std::ostringstream s;
  s << e.pairs.size() << " pairs, " << rays.size() << " rays";
  for (std::uint64_t seed : {1, 2, 3}) {
    EngineOptions o;
    o.seed = seed;
    auto a = generic_decomposition(alg, {1, -2}, o).summands;
    auto b = generic_decomposition(alg, {2, -1}, o).summands;
    bool good = a == GMultiset{{{0, -1}, 1}, {{1, -1}, 1}} && b == GMultiset{{{1, -1}, 1}, {{1, 0}, 1}};
    if (!good) s << "; seed " << seed << " gave " << format_multiset(a) << " and " << format_multiset(b);
    ok = ok && good;
  }
  return {ok, s.str() + (ok ? "; decompositions match under seeds 1, 2, 3" : "")};
}

Verdict ac5() {
  return over_algebras(kAlgebras, [](const std::string& n) {
    auto alg = builtin(n);
    return check_cones(alg, sample_for(alg), ProbeOptions{}, 0.9);
  });
}

Verdict ac6() {
  return over_algebras(kAlgebras, [](const std::string& n) {
    auto alg = builtin(n);
    return check_reduced(alg, sample_for(alg));
  });
}

Verdict ac7() {
  return over_algebras({"a2", "semisimple2", "cycle3"}, [](const std::string& n) {
    auto alg = builtin(n);
    return check_tame_probe(alg, catalog_for(n), sample_for(alg), n != "cycle3", 11);
  });
}

Verdict ac8() {
  return over_algebras(kAlgebras, [](const std::string& n) {
    auto alg = builtin(n);
    return check_open_cone_classes(alg, catalog_for(n), sample_for(alg), 13);
  });
}

Verdict ac9() {
  return over_algebras(kAlgebras, [](const std::string& n) { return check_torsion_axioms(catalog_for(n), 100, 17); });
}

Verdict ac10() {
  auto alg = builtin("a2");
  const auto& cat = catalog_for("a2");
  auto fan = chamber_fan(alg, enumerate_tau_tilting(alg));
  auto grid = box_grid(2, -3, 3);
  ProbeOptions po;
  po.t_max = 6;
  bool ok = true;
  std::size_t comparisons = 0;
  std::string bad;
  for (const auto& chamber : fan.chambers) {
    GVector bary(2, 0);
    for (const auto& r : chamber.rays())
      for (int i = 0; i < 2; ++i) bary[i] += static_cast<int>(numerator(r[i]));
    auto inside = dimension_report(alg, cat, bary, grid, po).class_span;
    for (const auto& r : chamber.rays()) {
      GVector wall{static_cast<int>(numerator(r[0])), static_cast<int>(numerator(r[1]))};
      auto on_wall = dimension_report(alg, cat, wall, grid, po).class_span;
      ++comparisons;
      if (on_wall >= inside) {
        ok = false;
        bad = "; wall " + format_g(wall) + " has " + std::to_string(on_wall) + ", barycenter " + format_g(bary) +
              " has " + std::to_string(inside);
      }
    }
  }
  return {ok && comparisons == 10, std::to_string(fan.chambers.size()) + " chambers, " + std::to_string(comparisons) +
                                       " wall/barycenter comparisons" + bad};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Verdict (*)()>> criteria{
      {"AC1 tau-tilting count on the 3-cycle", ac1},
      {"AC2 fan covers R^3", ac2},
      {"AC3 figure rays", ac3},
      {"AC4 A2 baseline", ac4},
      {"AC5 stabilized cones simplicial and rational", ac5},
      {"AC6 reduced summands independent", ac6},
      {"AC7 tame TF-class probe", ac7},
      {"AC8 open cones inside TF classes", ac8},
      {"AC9 torsion-pair axioms", ac9},
      {"AC10 dimension drop at walls", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v{false, ""};
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria pass" << std::endl;
  return failed ? 1 : 0;
}
