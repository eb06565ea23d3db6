#include "gfan/presentation.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

#include "gfan/error.hpp"
#include "gfan/hash.hpp"

namespace gfan {

GMultiset to_multiset(const std::vector<GVector>& gs) {
  std::map<GVector, int> count;
  for (const auto& g : gs) ++count[g];
  return GMultiset(count.begin(), count.end());
}

std::vector<GVector> expand(const GMultiset& m) {
  std::vector<GVector> out;
  for (const auto& [g, k] : m)
    for (int i = 0; i < k; ++i) out.push_back(g);
  return out;
}

GMultiset scale_multiset(const GMultiset& m, int t) {
  GMultiset out = m;
  for (auto& entry : out) entry.second *= t;
  return out;
}

GMultiset union_multiset(const GMultiset& a, const GMultiset& b) {
  std::map<GVector, int> count(a.begin(), a.end());
  for (const auto& [g, k] : b) count[g] += k;
  return GMultiset(count.begin(), count.end());
}

std::string format_g(const GVector& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g[i]);
  }
  return s + ")";
}

std::string format_multiset(const GMultiset& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += format_g(m[i].first) + ":" + std::to_string(m[i].second);
  }
  return s + "}";
}

GVector parse_g(const std::string& csv) {
  GVector g;
  std::stringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(tok);
      g.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad g-vector entry '" + tok + "'");
    }
  }
  return g;
}

TwoTermPresentation sample_presentation(const Algebra& alg, const GVector& g, std::mt19937_64& rng) {
  if (g.size() != static_cast<std::size_t>(alg.vertex_count()))
    throw Error(ErrorCode::InvalidArgument, "g-vector length does not match the vertex count");
  std::vector<int> minus, plus;
  for (int i = 0; i < alg.vertex_count(); ++i) {
    for (int k = 0; k < -g[i]; ++k) minus.push_back(i);
    for (int k = 0; k < g[i]; ++k) plus.push_back(i);
  }
  TwoTermPresentation p = zero_presentation(alg, minus, plus);
  for (std::size_t r = 0; r < plus.size(); ++r)
    for (std::size_t c = 0; c < minus.size(); ++c)
      for (auto q : alg.paths(plus[r], minus[c])) p.map.at(r, c)[q] = alg.field().random(rng);
  return p;
}

TwoTermPresentation sample_presentation(const Algebra& alg, const GVector& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_presentation(alg, g, rng);
}

std::uint64_t derive_seed(std::uint64_t seed, const GVector& g, std::uint64_t index) {
  std::uint64_t h = hash_combine(fnv1a64("sample"), seed);
  for (int x : g) h = hash_combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(x)));
  return hash_combine(h, index);
}

std::size_t decomposition_cost(const Algebra& alg, const GVector& g) {
  std::vector<int> minus, plus;
  for (int i = 0; i < alg.vertex_count(); ++i) {
    for (int k = 0; k < -g[i]; ++k) minus.push_back(i);
    for (int k = 0; k < g[i]; ++k) plus.push_back(i);
  }
  return chain_unknowns(alg, minus, plus, minus, plus);
}

namespace {

struct MemoKey {
  std::uint64_t algebra;
  GVector g;
  int samples;
  std::uint64_t seed;
  bool operator<(const MemoKey& o) const {
    return std::tie(algebra, g, samples, seed) < std::tie(o.algebra, o.g, o.samples, o.seed);
  }
};

std::mutex memo_mutex;
std::map<MemoKey, GenericDecomposition>& memo() {
  static std::map<MemoKey, GenericDecomposition> m;
  return m;
}

// Multisets from `count` samples starting at index `first`; errors are
// collected and rethrown after the parallel region.
std::vector<GMultiset> run_samples(const Algebra& alg, const GVector& g, std::uint64_t seed, int first, int count) {
  std::vector<GMultiset> results(count);
  std::vector<std::optional<Error>> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      std::mt19937_64 rng(derive_seed(seed, g, first + k));
      auto a = sample_presentation(alg, g, rng);
      auto pieces = decompose_presentation(alg, a, rng);
      results[k] = to_multiset(summand_g_vectors(alg, pieces));
    } catch (const Error& e) {
      errors[k] = e;
    }
  }
  for (auto& e : errors)
    if (e) throw *e;
  return results;
}

std::string tallies(const std::vector<GMultiset>& results) {
  std::map<GMultiset, int> t;
  for (const auto& r : results) ++t[r];
  std::string s;
  for (const auto& [m, k] : t) s += " " + format_multiset(m) + " x" + std::to_string(k);
  return s;
}

bool unanimous(const std::vector<GMultiset>& results) {
  return std::all_of(results.begin(), results.end(), [&](const GMultiset& r) { return r == results.front(); });
}

std::vector<std::string> cross_check(const Algebra& alg, const GMultiset& m, std::uint64_t seed) {
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!generically_e_orthogonal(alg, m[i].first, m[j].first, hash_combine(seed, i * 131 + j)))
        bad.push_back("e-invariant nonzero between " + format_g(m[i].first) + " and " + format_g(m[j].first));
  return bad;
}

}  // namespace

bool generically_e_orthogonal(const Algebra& alg, const GVector& g, const GVector& h, std::uint64_t seed) {
  auto a = sample_presentation(alg, g, derive_seed(seed, g, 0x5eed));
  auto b = sample_presentation(alg, h, derive_seed(seed, h, 0x5eee));
  return e_invariant(alg, a, b) == 0 && e_invariant(alg, b, a) == 0;
}

void clear_decomposition_memo() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().clear();
}

GenericDecomposition generic_decomposition(const Algebra& alg, const GVector& g, const EngineOptions& opt) {
  if (opt.samples < 3) throw Error(ErrorCode::InvalidArgument, "at least 3 samples are required");
  GenericDecomposition out;
  if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) {
    out.consensus = true;
    return out;
  }
  MemoKey key{algebra_hash(alg), g, opt.samples, opt.seed};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  auto results = run_samples(alg, g, opt.seed, 0, opt.samples);
  out.samples_used = opt.samples;
  std::vector<std::string> problems;
  if (unanimous(results)) problems = cross_check(alg, results.front(), opt.seed);
  if (!unanimous(results) || !problems.empty()) {
    results = run_samples(alg, g, opt.seed, opt.samples, opt.retry_samples);
    out.samples_used += opt.retry_samples;
    if (!unanimous(results))
      throw Error(ErrorCode::NoConsensus, "generic decomposition of " + format_g(g) + " disagrees:" + tallies(results));
    problems = cross_check(alg, results.front(), hash_combine(opt.seed, 0xabc));
    if (!problems.empty()) {
      std::string msg = "generic decomposition of " + format_g(g) + " failed the cross-check:";
      for (const auto& p : problems) msg += " " + p + ";";
      throw Error(ErrorCode::NoConsensus, msg);
    }
  }
  out.summands = results.front();
  out.consensus = true;
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().emplace(key, out);
  return out;
}

std::vector<GVector> ind_set(const Algebra& alg, const GVector& g, const EngineOptions& opt) {
  std::vector<GVector> out;
  for (const auto& [h, k] : generic_decomposition(alg, g, opt).summands) out.push_back(h);
  return out;
}

bool is_tame(const Algebra& alg, const GVector& g, const EngineOptions& opt) {
  GVector twice = g;
  for (auto& x : twice) x *= 2;
  auto once = generic_decomposition(alg, g, opt).summands;
  if (decomposition_cost(alg, twice) <= opt.budget)
    return generic_decomposition(alg, twice, opt).summands == scale_multiset(once, 2);
  // Too large to decompose directly: 2g = g + g exactly when two general
  // presentations of g have vanishing E-invariant in both directions.
  return generically_e_orthogonal(alg, g, g, hash_combine(opt.seed, 0x7a3e));
}

}  // namespace gfan
