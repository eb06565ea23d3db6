#include "gfan/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "gfan/error.hpp"
#include "gfan/hash.hpp"

namespace gfan {

std::optional<int> Quiver::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return std::nullopt;
}

std::string path_to_string(const Quiver& q, const PathWord& w) {
  if (w.arrows.empty()) return "e" + std::to_string(w.start + 1);
  std::string s;
  for (std::size_t i = 0; i < w.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrows[w.arrows[i]].label;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(std::string_view s, std::size_t line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected integer, got '" + std::string(s) + "'");
  return v;
}

PathWord parse_path(const Quiver& q, std::string_view s, std::size_t line_no) {
  PathWord w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t dot = s.find('.', pos);
    if (dot == std::string_view::npos) dot = s.size();
    auto label = s.substr(pos, dot - pos);
    auto idx = q.arrow_index(label);
    if (!idx) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown arrow '" + std::string(label) + "'");
    if (w.arrows.empty()) {
      w.start = q.arrows[*idx].source;
    } else if (q.arrows[w.arrows.back()].target != q.arrows[*idx].source) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": arrows not composable in '" + std::string(s) + "'");
    }
    w.arrows.push_back(*idx);
    pos = dot + 1;
  }
  return w;
}

}  // namespace

AlgebraInput parse_algebra(std::string_view text) {
  AlgebraInput out;
  bool have_vertices = false;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> relation_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "vertices") {
      if (tok.size() != 2) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertices <n>");
      auto n = parse_int(tok[1], line_no);
      if (n <= 0) throw Error(ErrorCode::ParseError, "vertex count must be positive");
      out.quiver.vertex_count = static_cast<int>(n);
      have_vertices = true;
    } else if (kw == "arrow") {
      if (!have_vertices) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": arrow before vertices");
      if (tok.size() != 4) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": arrow <label> <source> <target>");
      auto s = parse_int(tok[2], line_no);
      auto t = parse_int(tok[3], line_no);
      if (s < 1 || t < 1 || s > out.quiver.vertex_count || t > out.quiver.vertex_count)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertex out of range");
      if (out.quiver.arrow_index(tok[1])) throw Error(ErrorCode::ParseError, "duplicate arrow label '" + tok[1] + "'");
      if (tok[1].find_first_of(".*") != std::string::npos)
        throw Error(ErrorCode::ParseError, "arrow label may not contain '.' or '*'");
      out.quiver.arrows.push_back({tok[1], static_cast<int>(s - 1), static_cast<int>(t - 1)});
    } else if (kw == "relation") {
      if (tok.size() < 2) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": empty relation");
      relation_lines.emplace_back(line_no, std::vector<std::string>(tok.begin() + 1, tok.end()));
    } else if (kw == "prime") {
      if (tok.size() != 2) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": prime <p>");
      auto p = parse_int(tok[1], line_no);
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || p >= (1LL << 31))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
      out.prime = static_cast<std::uint32_t>(p);
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown keyword '" + kw + "'");
    }
  }
  if (!have_vertices) throw Error(ErrorCode::ParseError, "missing 'vertices' line");
  for (auto& [ln, terms] : relation_lines) {
    Relation rel;
    for (const auto& term : terms) {
      RelationTerm rt;
      std::string_view body = term;
      if (auto star = body.find('*'); star != std::string_view::npos) {
        rt.coefficient = parse_int(body.substr(0, star), ln);
        body = body.substr(star + 1);
      } else if (!body.empty() && body[0] == '-') {
        rt.coefficient = -1;
        body = body.substr(1);
      }
      rt.path = parse_path(out.quiver, body, ln);
      rel.terms.push_back(std::move(rt));
    }
    out.relations.push_back(std::move(rel));
  }
  return out;
}

std::string format_algebra(const AlgebraInput& input) {
  std::ostringstream os;
  os << "vertices " << input.quiver.vertex_count << '\n';
  for (const auto& a : input.quiver.arrows) os << "arrow " << a.label << ' ' << a.source + 1 << ' ' << a.target + 1 << '\n';
  for (const auto& r : input.relations) {
    os << "relation";
    for (const auto& t : r.terms) os << ' ' << t.coefficient << '*' << path_to_string(input.quiver, t.path);
    os << '\n';
  }
  os << "prime " << input.prime << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

using Word = std::vector<int>;

// Length first, then lexicographic on arrow rank (rank = position of the
// label in sorted label order).
struct WordLess {
  const std::vector<int>* rank;
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return (*rank)[a[i]] < (*rank)[b[i]];
    return false;
  }
};

using WPoly = std::map<Word, Scalar, WordLess>;

struct RuleSet {
  const PrimeField* field;
  WordLess less;
  std::vector<Word> lhs;
  std::vector<WPoly> rhs;

  // Position of the first rule occurring in w, as (rule, offset).
  std::optional<std::pair<std::size_t, std::size_t>> find(const Word& w) const {
    for (std::size_t r = 0; r < lhs.size(); ++r) {
      const Word& l = lhs[r];
      if (l.size() > w.size()) continue;
      auto it = std::search(w.begin(), w.end(), l.begin(), l.end());
      if (it != w.end()) return std::make_pair(r, static_cast<std::size_t>(it - w.begin()));
    }
    return std::nullopt;
  }

  bool has_suffix_rule(const Word& w) const {
    for (const auto& l : lhs)
      if (l.size() <= w.size() && std::equal(l.begin(), l.end(), w.end() - l.size())) return true;
    return false;
  }

  WPoly reduce(WPoly work) const {
    const PrimeField& f = *field;
    WPoly result(less);
    while (!work.empty()) {
      auto it = std::prev(work.end());
      Word w = it->first;
      Scalar c = it->second;
      work.erase(it);
      if (c == 0) continue;
      auto hit = find(w);
      if (!hit) {
        result[w] = c;
        continue;
      }
      auto [r, off] = *hit;
      for (const auto& [m, d] : rhs[r]) {
        Word nw(w.begin(), w.begin() + off);
        nw.insert(nw.end(), m.begin(), m.end());
        nw.insert(nw.end(), w.begin() + off + lhs[r].size(), w.end());
        Scalar& slot = work.try_emplace(std::move(nw), 0).first->second;
        slot = f.add(slot, f.mul(c, d));
      }
      for (auto i = work.begin(); i != work.end();) i = i->second == 0 ? work.erase(i) : std::next(i);
    }
    return result;
  }
};

WPoly scaled_shift(const PrimeField& f, const WPoly& p, const Word& left, const Word& right, Scalar c, WordLess less) {
  WPoly out(less);
  for (const auto& [w, a] : p) {
    Word nw = left;
    nw.insert(nw.end(), w.begin(), w.end());
    nw.insert(nw.end(), right.begin(), right.end());
    out[nw] = f.mul(a, c);
  }
  return out;
}

WPoly poly_minus(const PrimeField& f, WPoly a, const WPoly& b) {
  for (const auto& [w, c] : b) {
    Scalar& slot = a.try_emplace(w, 0).first->second;
    slot = f.sub(slot, c);
  }
  for (auto i = a.begin(); i != a.end();) i = i->second == 0 ? a.erase(i) : std::next(i);
  return a;
}

// The full polynomial lhs - rhs of rule r.
WPoly rule_poly(const PrimeField& f, const RuleSet& rs, std::size_t r) {
  WPoly p(rs.less);
  p[rs.lhs[r]] = 1;
  for (const auto& [w, c] : rs.rhs[r]) p[w] = f.neg(c);
  return p;
}

}  // namespace

Algebra build_algebra(const Quiver& quiver, const std::vector<Relation>& relations, std::uint32_t prime, int length_bound) {
  if (!is_prime(prime)) throw Error(ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
  if (length_bound < 2) throw Error(ErrorCode::InvalidArgument, "length_bound must be at least 2");
  if (quiver.vertex_count <= 0) throw Error(ErrorCode::InvalidArgument, "quiver needs at least one vertex");
  {
    std::set<std::string> labels;
    for (const auto& a : quiver.arrows) {
      if (!labels.insert(a.label).second) throw Error(ErrorCode::InvalidArgument, "duplicate arrow label " + a.label);
      if (a.source < 0 || a.target < 0 || a.source >= quiver.vertex_count || a.target >= quiver.vertex_count)
        throw Error(ErrorCode::IndexOutOfRange, "arrow " + a.label + " has an endpoint out of range");
    }
  }

  Algebra alg(prime);
  const PrimeField& f = alg.field_;
  alg.quiver_ = quiver;
  alg.relations_ = relations;
  alg.length_bound_ = length_bound;

  const int n_arrows = static_cast<int>(quiver.arrows.size());
  std::vector<int> order(n_arrows);
  for (int i = 0; i < n_arrows; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return quiver.arrows[a].label < quiver.arrows[b].label; });
  std::vector<int> rank(n_arrows);
  for (int i = 0; i < n_arrows; ++i) rank[order[i]] = i;
  WordLess less{&rank};

  RuleSet rs{&f, less, {}, {}};
  std::vector<WPoly> pending;
  for (const auto& rel : relations) {
    WPoly p(less);
    std::optional<int> src, dst;
    for (const auto& t : rel.terms) {
      if (t.path.length() < 2) throw Error(ErrorCode::NotAdmissible, "relation term " + path_to_string(quiver, t.path) + " has length < 2");
      for (std::size_t i = 0; i + 1 < t.path.arrows.size(); ++i)
        if (quiver.arrows[t.path.arrows[i]].target != quiver.arrows[t.path.arrows[i + 1]].source)
          throw Error(ErrorCode::InvalidArgument, "relation path not composable");
      const int s = quiver.arrows[t.path.arrows.front()].source;
      const int e = t.path.end(quiver);
      if ((src && *src != s) || (dst && *dst != e))
        throw Error(ErrorCode::NotAdmissible, "relation terms do not share source and target");
      src = s;
      dst = e;
      Scalar& slot = p.try_emplace(t.path.arrows, 0).first->second;
      slot = f.add(slot, f.reduce(t.coefficient));
    }
    for (auto i = p.begin(); i != p.end();) i = i->second == 0 ? p.erase(i) : std::next(i);
    if (!p.empty()) pending.push_back(std::move(p));
  }

  constexpr std::size_t kMaxRules = 4096;
  std::set<std::pair<Word, Word>> checked;
  for (;;) {
    while (!pending.empty()) {
      WPoly p = rs.reduce(std::move(pending.back()));
      pending.pop_back();
      if (p.empty()) continue;
      auto lead = std::prev(p.end());
      Word lhs = lead->first;
      if (static_cast<int>(lhs.size()) > length_bound)
        throw Error(ErrorCode::CompletionOverflow, "rewriting rule of length " + std::to_string(lhs.size()) + " exceeds the length bound");
      const Scalar inv = f.inv(lead->second);
      WPoly rhs(less);
      for (auto it = p.begin(); it != lead; ++it) rhs[it->first] = f.neg(f.mul(it->second, inv));
      // Rules whose left side contains the new one are re-queued.
      for (std::size_t r = rs.lhs.size(); r-- > 0;) {
        const Word& l = rs.lhs[r];
        if (l.size() >= lhs.size() && std::search(l.begin(), l.end(), lhs.begin(), lhs.end()) != l.end()) {
          pending.push_back(rule_poly(f, rs, r));
          rs.lhs.erase(rs.lhs.begin() + r);
          rs.rhs.erase(rs.rhs.begin() + r);
        }
      }
      rs.lhs.push_back(std::move(lhs));
      rs.rhs.push_back(std::move(rhs));
      if (rs.lhs.size() > kMaxRules) throw Error(ErrorCode::CompletionOverflow, "too many rewriting rules");
    }
    // Overlaps: a suffix of lhs_i equal to a prefix of lhs_j.
    for (std::size_t i = 0; i < rs.lhs.size(); ++i) {
      for (std::size_t j = 0; j < rs.lhs.size(); ++j) {
        const Word& u = rs.lhs[i];
        const Word& v = rs.lhs[j];
        if (!checked.insert({u, v}).second) continue;
        for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
          if (!std::equal(u.end() - k, u.end(), v.begin())) continue;
          Word right(v.begin() + k, v.end());
          Word left(u.begin(), u.end() - k);
          WPoly s = poly_minus(f, scaled_shift(f, rule_poly(f, rs, i), {}, right, 1, less),
                               scaled_shift(f, rule_poly(f, rs, j), left, {}, 1, less));
          s = rs.reduce(std::move(s));
          if (!s.empty()) pending.push_back(std::move(s));
        }
      }
    }
    if (pending.empty()) break;
  }
  for (std::size_t r = 0; r < rs.lhs.size(); ++r) rs.rhs[r] = rs.reduce(rs.rhs[r]);

  // Irreducible paths, breadth first.
  std::vector<PathWord> basis;
  std::vector<PathWord> frontier;
  for (int v = 0; v < quiver.vertex_count; ++v) frontier.push_back({v, {}});
  basis = frontier;
  for (int len = 1; !frontier.empty(); ++len) {
    std::vector<PathWord> next;
    for (const auto& w : frontier) {
      const int end = w.end(quiver);
      for (int a = 0; a < n_arrows; ++a) {
        if (quiver.arrows[a].source != end) continue;
        PathWord nw = w;
        nw.arrows.push_back(a);
        if (rs.has_suffix_rule(nw.arrows)) continue;
        if (len >= length_bound)
          throw Error(ErrorCode::NotFiniteDimensional, "irreducible path " + path_to_string(quiver, nw) + " reaches the length bound");
        next.push_back(std::move(nw));
      }
    }
    basis.insert(basis.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(basis.begin(), basis.end(), [&](const PathWord& a, const PathWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return less(a.arrows, b.arrows);
    return a.start < b.start;
  });
  alg.basis_ = basis;
  const int nv = quiver.vertex_count;
  alg.trivial_.assign(nv, 0);
  alg.arrow_basis_.assign(n_arrows, 0);
  alg.between_.assign(static_cast<std::size_t>(nv) * nv, {});
  alg.local_.assign(basis.size(), 0);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    alg.index_[{basis[b].start, basis[b].arrows}] = b;
    if (basis[b].arrows.empty()) alg.trivial_[basis[b].start] = b;
    if (basis[b].arrows.size() == 1) alg.arrow_basis_[basis[b].arrows[0]] = b;
    auto& list = alg.between_[basis[b].start * nv + basis[b].end(quiver)];
    alg.local_[b] = list.size();
    list.push_back(b);
  }

  for (std::size_t r = 0; r < rs.lhs.size(); ++r) {
    Algebra::Rule rule;
    rule.lhs = rs.lhs[r];
    for (const auto& [w, c] : rs.rhs[r]) rule.rhs[w] = c;
    alg.rules_.push_back(std::move(rule));
  }

  const std::size_t d = basis.size();
  alg.table_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (basis[i].end(quiver) != basis[j].start) continue;
      auto& cell = alg.table_[i * d + j];
      if (basis[i].arrows.empty()) {
        cell.push_back({static_cast<std::uint32_t>(j), 1});
        continue;
      }
      if (basis[j].arrows.empty()) {
        cell.push_back({static_cast<std::uint32_t>(i), 1});
        continue;
      }
      WPoly p(less);
      Word w = basis[i].arrows;
      w.insert(w.end(), basis[j].arrows.begin(), basis[j].arrows.end());
      p[w] = 1;
      for (const auto& [nw, c] : rs.reduce(std::move(p)))
        cell.push_back({static_cast<std::uint32_t>(alg.index_.at({basis[i].start, nw})), c});
      std::sort(cell.begin(), cell.end());
    }
  }
  return alg;
}

Algebra build_algebra(const AlgebraInput& input, int length_bound) {
  return build_algebra(input.quiver, input.relations, input.prime, length_bound);
}

std::optional<std::size_t> Algebra::find_basis(const PathWord& w) const {
  auto it = index_.find({w.start, w.arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Algebra::basis_element(std::size_t b) const {
  Element e(dim(), 0);
  e[b] = 1;
  return e;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  Element z(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      const Scalar c = field_.mul(x[i], y[j]);
      for (const auto& [k, v] : product(i, j)) z[k] = field_.add(z[k], field_.mul(c, v));
    }
  }
  return z;
}

Element Algebra::normal_form(const PathWord& w) const {
  Element e = basis_element(trivial(w.start));
  for (int a : w.arrows) e = multiply(e, basis_element(arrow_element(a)));
  return e;
}

Algebra Algebra::with_prime(std::uint32_t p) const { return build_algebra(quiver_, relations_, p, length_bound_); }

Algebra Algebra::opposite() const {
  Quiver q = quiver_;
  for (auto& a : q.arrows) std::swap(a.source, a.target);
  std::vector<Relation> rels = relations_;
  for (auto& r : rels) {
    for (auto& t : r.terms) {
      std::reverse(t.path.arrows.begin(), t.path.arrows.end());
      t.path.start = q.arrows[t.path.arrows.front()].source;
    }
  }
  return build_algebra(q, rels, field_.prime(), length_bound_);
}

AlgebraInput Algebra::input() const { return {quiver_, relations_, field_.prime()}; }

std::uint64_t algebra_hash(const Algebra& alg) { return fnv1a64(format_algebra(alg.input())); }

}  // namespace gfan
