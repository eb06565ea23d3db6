#include "gfan/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gfan/builtins.hpp"
#include "gfan/cache.hpp"
#include "gfan/error.hpp"
#include "gfan/records.hpp"
#include "gfan/suites.hpp"
#include "gfan/svg.hpp"
#include "gfan/tau_tilting.hpp"
#include "gfan/tf_probe.hpp"

namespace gfan {

namespace {

struct Settings {
  std::string algebra;
  std::string g;
  std::uint64_t seed = 1;
  int samples = 8;
  int tmax = 24;
  std::size_t dim_cap = 8;
  std::string grid = "-2:2";
  std::string format = "human";
  bool no_cache = false;
  std::string plane = "1,1,1=1";
  std::string out_path;
  std::size_t max_pairs = 10000;
  int max_depth = 64;
  std::string suite = "all";
  std::size_t count = 20;
  bool gate_boundary = false;
};

struct Loaded {
  std::string text;
  Algebra alg;
};

Loaded load_algebra(const std::string& where) {
  std::string text;
  if (std::filesystem::is_regular_file(where)) {
    std::ifstream in(where, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  } else if (auto b = builtin_algebra_text(where)) {
    text = *b;
  } else {
    throw Error(ErrorCode::InvalidArgument, "no algebra file or builtin named '" + where + "'");
  }
  return {text, build_algebra(parse_algebra(text))};
}

GVector read_g(const std::string& text, const Algebra& alg) {
  auto g = parse_g(text);
  if (static_cast<int>(g.size()) != alg.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "g has " + std::to_string(g.size()) + " entries, algebra has " +
                                                std::to_string(alg.vertex_count()) + " vertices");
  return g;
}

std::vector<GVector> read_grid(const std::string& spec, int n) {
  auto colon = spec.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(spec);
    std::size_t a = 0, b = 0;
    int lo = std::stoi(spec.substr(0, colon), &a);
    int hi = std::stoi(spec.substr(colon + 1), &b);
    if (a != colon || b != spec.size() - colon - 1 || lo > hi) throw std::invalid_argument(spec);
    return box_grid(n, lo, hi);
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw Error(ErrorCode::ParseError, "grid must look like lo:hi, got '" + spec + "'");
}

// Record values: vectors as "1,-2", lists of vectors joined by ';'.
std::string csv(const GVector& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s;
}

std::string csv(const QVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

std::string encode(const GMultiset& m) {
  if (m.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ";" : "") + csv(m[i].first) + ":" + std::to_string(m[i].second);
  return s;
}

std::string encode(const std::vector<QVector>& vs) {
  if (vs.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ";" : "") + csv(vs[i]);
  return s;
}

std::string yes(bool b) { return b ? "true" : "false"; }

struct Output {
  std::vector<Record> records;
  std::string human;
  int status = 0;
};

EngineOptions engine_options(const Settings& s) {
  EngineOptions o;
  o.samples = s.samples;
  o.seed = s.seed;
  return o;
}

Output cmd_decompose(const Loaded& a, const Settings& s) {
  auto g = read_g(s.g, a.alg);
  auto d = generic_decomposition(a.alg, g, engine_options(s));
  Output o;
  o.records.push_back(Record{"decomposition"}
                          .add("g", csv(g))
                          .add("summands", encode(d.summands))
                          .add("samples", std::to_string(d.samples_used))
                          .add("consensus", yes(d.consensus))
                          .add("anomalies", std::to_string(d.anomalies.size()))
                          .add("seed", std::to_string(s.seed)));
  std::ostringstream h;
  h << "g = " << format_g(g) << "\n";
  h << "summands: " << format_multiset(d.summands) << "\n";
  h << "samples: " << d.samples_used << (d.consensus ? ", all agree" : ", no consensus") << "\n";
  for (const auto& an : d.anomalies) h << "anomaly: " << an << "\n";
  o.human = h.str();
  return o;
}

Output cmd_cone(const Loaded& a, const Settings& s) {
  auto g = read_g(s.g, a.alg);
  ProbeOptions po;
  po.engine = engine_options(s);
  po.t_max = s.tmax;
  auto c = cone_of_multiples(a.alg, g, po);
  const auto& cone = c.union_cone;
  bool simplicial = cone.is_pointed() && is_simplicial(cone);
  bool rational = std::all_of(cone.rays().begin(), cone.rays().end(), [](const QVector& r) {
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return denominator(x) == 1; });
  });
  bool rays_ok = ray_condition_proxy(c);
  Output o;
  std::ostringstream h;
  h << "g = " << format_g(g) << "\n";
  for (const auto& [t, m] : c.per_t) {
    o.records.push_back(Record{"multiple"}.add("t", std::to_string(t)).add("summands", encode(m)));
    h << "t=" << t << ": " << format_multiset(m) << "\n";
  }
  for (int t : c.skipped) {
    o.records.push_back(Record{"skipped"}.add("t", std::to_string(t)));
    h << "t=" << t << ": skipped, wild part over budget\n";
  }
  o.records.push_back(Record{"cone"}
                          .add("g", csv(g))
                          .add("rays", encode(cone.rays()))
                          .add("span", std::to_string(cone.span_dim()))
                          .add("stabilized", c.stabilized_at ? std::to_string(*c.stabilized_at) : "none")
                          .add("simplicial", yes(simplicial))
                          .add("rational", yes(rational))
                          .add("ray_condition", yes(rays_ok))
                          .add("seed", std::to_string(s.seed)));
  h << "rays:";
  for (const auto& r : cone.rays()) h << " " << format_vector(r);
  h << "\nspan dimension " << cone.span_dim() << ", ";
  h << (c.stabilized_at ? "stabilized at t=" + std::to_string(*c.stabilized_at) : std::string("not stabilized"));
  h << "\nsimplicial: " << (simplicial ? "yes" : "no") << ", rational: " << (rational ? "yes" : "no")
    << ", ray condition: " << (rays_ok ? "holds" : "fails") << "\n";
  o.human = h.str();
  return o;
}

Output cmd_tautilt(const Loaded& a, const Settings& s) {
  auto e = enumerate_tau_tilting(a.alg, s.max_pairs, s.max_depth, s.seed);
  Output o;
  std::ostringstream h;
  for (std::size_t i = 0; i < e.pairs.size(); ++i) {
    auto gs = e.pairs[i].g_vectors();
    std::vector<QVector> qs;
    h << "pair " << i << ":";
    for (const auto& g : gs) {
      qs.push_back(to_rational(g));
      h << " " << format_g(g);
    }
    h << "\n";
    o.records.push_back(Record{"pair"}.add("index", std::to_string(i)).add("g", encode(qs)));
  }
  h << e.pairs.size() << " pairs (" << (e.complete ? "complete" : "truncated") << ")\n";
  if (e.unverified_collisions) h << e.unverified_collisions << " unverified key collisions\n";
  o.records.push_back(Record{"enumeration"}
                          .add("pairs", std::to_string(e.pairs.size()))
                          .add("complete", yes(e.complete))
                          .add("edges", std::to_string(e.edges.size()))
                          .add("collisions", std::to_string(e.unverified_collisions)));
  o.human = h.str();
  return o;
}

char flag_char(const TorsionFlags& f) {
  if (f.t_bar && f.f_bar) return 'W';
  if (f.t_bar) return 'T';
  if (f.f_bar) return 'F';
  return '.';
}

Output cmd_scan(const Loaded& a, const Settings& s) {
  auto grid = read_grid(s.grid, a.alg.vertex_count());
  CatalogOptions co;
  co.dim_cap = s.dim_cap;
  co.seed = s.seed;
  auto catalog = build_catalog(a.alg, co);
  std::vector<QVector> points;
  for (const auto& g : grid) points.push_back(to_rational(g));
  auto sigs = signatures_for(points, catalog);
  Output o;
  std::ostringstream h;
  h << "catalog: " << catalog.members.size() << " modules, dim cap " << catalog.dim_cap << "\n";
  std::set<std::string> classes;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::string sig;
    for (const auto& f : sigs[i].flags) sig += flag_char(f);
    if (sig.empty()) sig = "-";
    classes.insert(sig);
    auto w = w_space_estimate(points[i], catalog).span;
    h << format_g(grid[i]) << "  w>=" << w << "  " << sig << "\n";
    o.records.push_back(
        Record{"point"}.add("theta", csv(grid[i])).add("w", std::to_string(w)).add("signature", sig));
  }
  h << classes.size() << " distinct signatures over " << grid.size() << " points\n";
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(catalog.hash));
  o.records.push_back(Record{"scan"}
                          .add("points", std::to_string(grid.size()))
                          .add("classes", std::to_string(classes.size()))
                          .add("members", std::to_string(catalog.members.size()))
                          .add("catalog", hex));
  o.human = h.str();
  return o;
}

Output cmd_fan_svg(const Loaded& a, const Settings& s) {
  if (s.out_path.empty()) throw Error(ErrorCode::InvalidArgument, "fan-svg needs --out");
  auto plane = parse_plane(s.plane);
  auto e = enumerate_tau_tilting(a.alg, s.max_pairs, s.max_depth, s.seed);
  auto slice = slice_fan(chamber_fan(a.alg, e), plane);
  std::ofstream out(s.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + s.out_path);
  out << render_svg(slice);
  Output o;
  o.records.push_back(Record{"svg"}
                          .add("path", s.out_path)
                          .add("chambers", std::to_string(slice.chambers.size()))
                          .add("walls", std::to_string(slice.walls.size()))
                          .add("complete", yes(e.complete)));
  std::ostringstream h;
  h << slice.chambers.size() << " chambers, " << slice.walls.size() << " walls -> " << s.out_path << "\n";
  if (!e.complete) h << "fan enumeration truncated at " << e.pairs.size() << " pairs\n";
  o.human = h.str();
  return o;
}

Output cmd_verify(const Loaded& a, const Settings& s) {
  static const std::vector<std::string> names{"decomposition", "cones",   "reduced",   "fan",
                                              "torsion",       "open-cones", "tame-probe"};
  if (s.suite != "all" && std::find(names.begin(), names.end(), s.suite) == names.end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + s.suite + "'");
  auto want = [&](const std::string& n) { return s.suite == "all" || s.suite == n; };
  const int n = a.alg.vertex_count();
  auto gs = sample_g_vectors(n, s.count, -3, 3, s.seed);
  ProbeOptions po;
  po.engine = engine_options(s);
  po.t_max = s.tmax;
  std::optional<ModuleCatalog> catalog;
  auto need_catalog = [&]() -> const ModuleCatalog& {
    if (!catalog) {
      CatalogOptions co;
      co.dim_cap = s.dim_cap;
      co.seed = s.seed;
      catalog = build_catalog(a.alg, co);
    }
    return *catalog;
  };
  std::vector<SuiteResult> results;
  if (want("decomposition")) results.push_back(check_decompositions(a.alg, gs, po.engine));
  if (want("cones")) results.push_back(check_cones(a.alg, gs, po));
  if (want("reduced")) results.push_back(check_reduced(a.alg, gs, po));
  if (want("fan")) results.push_back(check_fan(a.alg, std::min<std::size_t>(s.max_pairs, 2000),
                                               std::min(s.max_depth, 12), s.seed));
  if (want("torsion")) results.push_back(check_torsion_axioms(need_catalog(), 100, s.seed));
  if (want("open-cones")) results.push_back(check_open_cone_classes(a.alg, need_catalog(), gs, s.seed, po));
  if (want("tame-probe"))
    results.push_back(check_tame_probe(a.alg, need_catalog(), gs, s.gate_boundary, s.seed, po));
  Output o;
  std::ostringstream h;
  for (const auto& r : results) {
    h << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
    if (!r.passed()) h << ", " << r.violations.size() << " violations";
    h << ")\n";
    for (const auto& note : r.notes) h << "  " << note << "\n";
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) h << "  violation: " << r.violations[i] << "\n";
    o.records.push_back(Record{"suite"}
                            .add("name", r.name)
                            .add("passed", yes(r.passed()))
                            .add("checks", std::to_string(r.checks))
                            .add("violations", std::to_string(r.violations.size())));
    if (!r.passed()) o.status = 1;
  }
  o.human = h.str();
  return o;
}

bool input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotAdmissible:
    case ErrorCode::NotFiniteDimensional:
    case ErrorCode::NotPrime:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::CompletionOverflow:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Generic decompositions, g-vector cones and TF-equivalence probes"};
  app.require_subcommand(1);

  auto algebra = [&](CLI::App* c) {
    c->add_option("--algebra", s.algebra, "algebra file, or a builtin name")->required();
    c->add_option("--seed", s.seed, "seed for every random choice");
    c->add_option("--format", s.format, "human or records")->check(CLI::IsMember({"human", "records"}));
    c->add_flag("--no-cache", s.no_cache, "recompute and do not store");
  };
  auto* dec = app.add_subcommand("decompose", "generic decomposition of a g-vector");
  algebra(dec);
  dec->add_option("--g", s.g, "comma-separated integers")->required();
  dec->add_option("--samples", s.samples, "random presentations per vector")->check(CLI::Range(3, 1000));

  auto* cone = app.add_subcommand("cone", "cone spanned by the summands of multiples of g");
  algebra(cone);
  cone->add_option("--g", s.g, "comma-separated integers")->required();
  cone->add_option("--tmax", s.tmax, "largest multiplier")->check(CLI::Range(1, 24));
  cone->add_option("--samples", s.samples, "random presentations per vector")->check(CLI::Range(3, 1000));

  auto* tt = app.add_subcommand("tautilt", "enumerate support tau-tilting pairs by mutation");
  algebra(tt);
  tt->add_option("--max-pairs", s.max_pairs, "stop after this many pairs");
  tt->add_option("--max-depth", s.max_depth, "stop this many mutations from the projective pair");

  auto* scan = app.add_subcommand("scan", "signatures and W-space estimates over an integer box");
  algebra(scan);
  scan->add_option("--grid", s.grid, "box lo:hi in every coordinate");
  scan->add_option("--dim-cap", s.dim_cap, "largest catalog module dimension");

  auto* svg = app.add_subcommand("fan-svg", "slice the chamber fan by a plane and draw it");
  algebra(svg);
  svg->add_option("--plane", s.plane, "a,b,c=d");
  svg->add_option("--out", s.out_path, "SVG file to write")->required();
  svg->add_option("--max-pairs", s.max_pairs, "stop after this many pairs");
  svg->add_option("--max-depth", s.max_depth, "stop this many mutations from the projective pair");

  auto* ver = app.add_subcommand("verify", "run the property suites");
  algebra(ver);
  ver->add_option("--suite", s.suite, "all, decomposition, cones, reduced, fan, torsion, open-cones or tame-probe");
  ver->add_option("--count", s.count, "random g-vectors per suite");
  ver->add_option("--tmax", s.tmax, "largest multiplier")->check(CLI::Range(1, 24));
  ver->add_option("--samples", s.samples, "random presentations per vector")->check(CLI::Range(3, 1000));
  ver->add_option("--dim-cap", s.dim_cap, "largest catalog module dimension");
  ver->add_flag("--gate-boundary", s.gate_boundary, "fail when a boundary point has no witness");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Loaded loaded = load_algebra(s.algebra);
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    // The cache only holds printed output; fan-svg writes a file and verify
    // is a check, so both always run.
    const bool cacheable = name != "fan-svg" && name != "verify" && !s.no_cache;
    std::ostringstream params;
    params << s.g << '|' << s.samples << '|' << s.tmax << '|' << s.dim_cap << '|' << s.grid << '|' << s.format << '|'
           << s.max_pairs << '|' << s.max_depth;
    auto cache = ResultCache::from_environment();
    const auto key = cache_key(loaded.text, name, params.str(), s.seed);
    if (cacheable)
      if (auto hit = cache.get(key)) {
        out << *hit;
        return 0;
      }
    Output o;
    if (name == "decompose") o = cmd_decompose(loaded, s);
    else if (name == "cone") o = cmd_cone(loaded, s);
    else if (name == "tautilt") o = cmd_tautilt(loaded, s);
    else if (name == "scan") o = cmd_scan(loaded, s);
    else if (name == "fan-svg") o = cmd_fan_svg(loaded, s);
    else o = cmd_verify(loaded, s);
    std::string text = s.format == "records" ? format_records(o.records) : o.human;
    out << text;
    if (cacheable && o.status == 0) cache.put(key, text);
    return o.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error(e.code()) ? 2 : 1;
  }
}

}  // namespace gfan
