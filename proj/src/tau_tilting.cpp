#include "gfan/tau_tilting.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gfan/decompose.hpp"
#include "gfan/error.hpp"
#include "gfan/hash.hpp"

namespace gfan {

SiltingSummand summand_from_complex(const Algebra& alg, const TwoTermPresentation& c) {
  SiltingSummand s;
  s.complex = c;
  s.g = c.g_vector(alg.vertex_count());
  if (c.plus.empty() && c.minus.size() == 1) {
    s.shifted_vertex = c.minus[0];
    s.module = zero_representation(alg);
  } else {
    s.module = presentation_cokernel(alg, c);
  }
  return s;
}

SiltingSummand module_summand(const Algebra& alg, const Representation& m) {
  return summand_from_complex(alg, minimal_presentation(alg, m));
}

SiltingSummand shifted_projective(const Algebra& alg, int vertex) {
  return summand_from_complex(alg, zero_presentation(alg, {vertex}, {}));
}

std::vector<Representation> TauRigidPair::m_summands() const {
  std::vector<Representation> out;
  for (const auto& s : summands)
    if (!s.shifted_vertex) out.push_back(s.module);
  return out;
}

std::vector<int> TauRigidPair::p_summands() const {
  std::vector<int> out;
  for (const auto& s : summands)
    if (s.shifted_vertex) out.push_back(*s.shifted_vertex);
  return out;
}

std::vector<GVector> TauRigidPair::g_vectors() const {
  std::vector<GVector> out;
  for (const auto& s : summands) out.push_back(s.g);
  return out;
}

namespace {

void sort_summands(TauRigidPair& p) {
  std::sort(p.summands.begin(), p.summands.end(),
            [](const SiltingSummand& a, const SiltingSummand& b) { return a.g < b.g; });
}

// A complex T2 -d1-> T1 -d2-> T0 of projectives.
struct ThreeTerm {
  std::vector<int> t2, t1, t0;
  LambdaMatrix d1;  // t1 x t2
  LambdaMatrix d2;  // t0 x t1
};

bool is_unit(const Algebra& alg, int rv, int cv, const Element& e) { return rv == cv && e[alg.trivial(rv)] != 0; }

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

// m - m[:, c] u^{-1} m[r, :] with row r and column c removed.
LambdaMatrix schur(const Algebra& alg, const LambdaMatrix& m, std::size_t r, std::size_t c, int v) {
  auto rows = all_but(m.rows(), r), cols = all_but(m.cols(), c);
  LambdaMatrix inv({v}, {v}, alg.dim());
  inv.at(0, 0) = local_unit_inverse(alg, v, m.at(r, c));
  auto left = m.select(rows, {c});
  auto right = m.select({r}, cols);
  auto corr = lambda_multiply(alg, left, lambda_multiply(alg, inv, right));
  return lambda_add(alg, m.select(rows, cols), lambda_scale(alg, corr, alg.field().neg(1)));
}

std::vector<int> pick(const std::vector<int>& v, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  for (auto i : idx) out.push_back(v[i]);
  return out;
}

// Removes unit entries of d1 (which = 1) or d2 (which = 2) by Gaussian
// elimination; the result is homotopy equivalent.
void eliminate(const Algebra& alg, ThreeTerm& c, int which) {
  for (;;) {
    LambdaMatrix& d = which == 1 ? c.d1 : c.d2;
    const auto& rv = which == 1 ? c.t1 : c.t0;
    const auto& cv = which == 1 ? c.t2 : c.t1;
    std::optional<std::pair<std::size_t, std::size_t>> at;
    for (std::size_t r = 0; r < d.rows() && !at; ++r)
      for (std::size_t k = 0; k < d.cols(); ++k)
        if (is_unit(alg, rv[r], cv[k], d.at(r, k))) {
          at = {r, k};
          break;
        }
    if (!at) return;
    auto [r, k] = *at;
    if (which == 1) {
      c.d1 = schur(alg, c.d1, r, k, rv[r]);
      c.d2 = c.d2.select(all_but(c.t0.size(), c.t0.size()), all_but(c.t1.size(), r));
      c.t1 = pick(c.t1, all_but(c.t1.size(), r));
      c.t2 = pick(c.t2, all_but(c.t2.size(), k));
    } else {
      c.d2 = schur(alg, c.d2, r, k, rv[r]);
      c.d1 = c.d1.select(all_but(c.t1.size(), k), all_but(c.t2.size(), c.t2.size()));
      c.t0 = pick(c.t0, all_but(c.t0.size(), r));
      c.t1 = pick(c.t1, all_but(c.t1.size(), k));
    }
  }
}

LambdaMatrix vstack(const Algebra& alg, const LambdaMatrix& top, const LambdaMatrix& bottom) {
  std::vector<int> rows = top.row_vertices();
  rows.insert(rows.end(), bottom.row_vertices().begin(), bottom.row_vertices().end());
  LambdaMatrix out(rows, top.cols() ? top.col_vertices() : bottom.col_vertices(), alg.dim());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out.at(r, c) = top.at(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c) out.at(top.rows() + r, c) = bottom.at(r, c);
  return out;
}

LambdaMatrix hstack(const Algebra& alg, const LambdaMatrix& left, const LambdaMatrix& right) {
  std::vector<int> cols = left.col_vertices();
  cols.insert(cols.end(), right.col_vertices().begin(), right.col_vertices().end());
  LambdaMatrix out(left.rows() ? left.row_vertices() : right.row_vertices(), cols, alg.dim());
  for (std::size_t r = 0; r < left.rows(); ++r)
    for (std::size_t c = 0; c < left.cols(); ++c) out.at(r, c) = left.at(r, c);
  for (std::size_t r = 0; r < right.rows(); ++r)
    for (std::size_t c = 0; c < right.cols(); ++c) out.at(r, left.cols() + c) = right.at(r, c);
  return out;
}

LambdaMatrix empty_lambda(const Algebra& alg, const std::vector<int>& rows, const std::vector<int>& cols) {
  return LambdaMatrix(rows, cols, alg.dim());
}

// Copies of the other summands indexed by a basis of maps from (left) or
// to (right) the exchanged summand.
struct Approximation {
  TwoTermPresentation target;  // direct sum of copies
  LambdaMatrix h1, h0;         // components of the approximation map
};

Approximation approximation(const Algebra& alg, const TwoTermPresentation& x, const std::vector<TwoTermPresentation>& rest,
                            bool left) {
  Approximation ap;
  ap.target = zero_presentation(alg, {}, {});
  ap.h1 = left ? empty_lambda(alg, {}, x.minus) : empty_lambda(alg, x.minus, {});
  ap.h0 = left ? empty_lambda(alg, {}, x.plus) : empty_lambda(alg, x.plus, {});
  for (const auto& u : rest) {
    auto maps = left ? homotopy_hom(alg, x, u) : homotopy_hom(alg, u, x);
    for (const auto& phi : maps) {
      ap.target = direct_sum(alg, ap.target, u);
      if (left) {
        ap.h1 = vstack(alg, ap.h1, phi.f1);
        ap.h0 = vstack(alg, ap.h0, phi.f0);
      } else {
        ap.h1 = hstack(alg, ap.h1, phi.f1);
        ap.h0 = hstack(alg, ap.h0, phi.f0);
      }
    }
  }
  return ap;
}

std::optional<TwoTermPresentation> left_exchange(const Algebra& alg, const TwoTermPresentation& x,
                                                 const std::vector<TwoTermPresentation>& rest) {
  auto ap = approximation(alg, x, rest, true);
  const auto& u = ap.target;
  ThreeTerm c;
  c.t2 = x.minus;
  c.t1 = x.plus;
  c.t1.insert(c.t1.end(), u.minus.begin(), u.minus.end());
  c.t0 = u.plus;
  c.d1 = vstack(alg, lambda_scale(alg, x.map, alg.field().neg(1)), ap.h1);
  c.d2 = hstack(alg, ap.h0, u.map);
  eliminate(alg, c, 1);
  if (!c.t2.empty()) return std::nullopt;
  return TwoTermPresentation{c.t1, c.t0, c.d2};
}

std::optional<TwoTermPresentation> right_exchange(const Algebra& alg, const TwoTermPresentation& x,
                                                  const std::vector<TwoTermPresentation>& rest) {
  auto ap = approximation(alg, x, rest, false);
  const auto& u = ap.target;
  ThreeTerm c;
  c.t2 = u.minus;
  c.t1 = u.plus;
  c.t1.insert(c.t1.end(), x.minus.begin(), x.minus.end());
  c.t0 = x.plus;
  c.d1 = vstack(alg, u.map, ap.h1);
  c.d2 = hstack(alg, ap.h0, lambda_scale(alg, x.map, alg.field().neg(1)));
  eliminate(alg, c, 2);
  if (!c.t0.empty()) return std::nullopt;
  return TwoTermPresentation{c.t2, c.t1, c.d1};
}

}  // namespace

TauRigidPair make_pair(const Algebra& alg, const std::vector<Representation>& m, const std::vector<int>& p) {
  TauRigidPair out;
  for (const auto& x : m) out.summands.push_back(module_summand(alg, x));
  for (int v : p) out.summands.push_back(shifted_projective(alg, v));
  sort_summands(out);
  return out;
}

TauRigidPair projective_pair(const Algebra& alg) {
  std::vector<Representation> m;
  for (int i = 0; i < alg.vertex_count(); ++i) m.push_back(projective(alg, i));
  return make_pair(alg, m, {});
}

TauRigidPair shifted_pair(const Algebra& alg) {
  std::vector<int> p;
  for (int i = 0; i < alg.vertex_count(); ++i) p.push_back(i);
  return make_pair(alg, {}, p);
}

bool is_tau_rigid_pair(const Algebra& alg, const std::vector<Representation>& m, const std::vector<int>& p) {
  if (m.empty()) return true;
  auto sum = direct_sum(alg, m);
  if (!p.empty() && hom_dim(alg, projective_sum(alg, p), sum) != 0) return false;
  return hom_dim(alg, sum, tau(alg, sum)) == 0;
}

bool is_tau_rigid_pair(const Algebra& alg, const TauRigidPair& pair) {
  return is_tau_rigid_pair(alg, pair.m_summands(), pair.p_summands());
}

RationalCone cone_of_pair(const Algebra& alg, const TauRigidPair& pair) {
  if (!is_tau_rigid_pair(alg, pair)) throw Error(ErrorCode::NotTauRigid, "pair is not tau-rigid");
  std::vector<QVector> gens;
  for (const auto& s : pair.summands) gens.push_back(to_rational(s.g));
  RationalCone c(alg.vertex_count(), gens);
  if (pair.is_support_tau_tilting(alg.vertex_count()) && !(is_simplicial(c) && c.span_dim() == gens.size()))
    throw Error(ErrorCode::NotTauRigid, "g-vectors of a support tau-tilting pair are dependent");
  return c;
}

TauRigidPair mutate(const Algebra& alg, const TauRigidPair& pair, std::size_t k, std::uint64_t seed) {
  if (k >= pair.summands.size()) throw Error(ErrorCode::IndexOutOfRange, "no summand " + std::to_string(k));
  std::vector<TwoTermPresentation> rest;
  std::vector<GVector> rest_g;
  for (std::size_t i = 0; i < pair.summands.size(); ++i)
    if (i != k) {
      rest.push_back(pair.summands[i].complex);
      rest_g.push_back(pair.summands[i].g);
    }
  const auto& x = pair.summands[k].complex;
  auto exchanged = left_exchange(alg, x, rest);
  if (!exchanged) exchanged = right_exchange(alg, x, rest);
  if (!exchanged) throw Error(ErrorCode::ApproximationFailed, "neither exchange stays in two terms");
  std::mt19937_64 rng(seed);
  auto pieces = decompose_presentation(alg, strip_contractible(alg, *exchanged), rng);
  std::optional<TwoTermPresentation> fresh;
  for (const auto& p : pieces) {
    GVector g = p.piece.g_vector(alg.vertex_count());
    if (std::find(rest_g.begin(), rest_g.end(), g) != rest_g.end()) continue;
    if (fresh || p.residue_degree != 1)
      throw Error(ErrorCode::ApproximationFailed, "exchange produced more than one new summand");
    fresh = p.piece;
  }
  if (!fresh) throw Error(ErrorCode::ApproximationFailed, "exchange produced no new summand");
  TauRigidPair out;
  for (std::size_t i = 0; i < pair.summands.size(); ++i)
    if (i != k) out.summands.push_back(pair.summands[i]);
  out.summands.push_back(summand_from_complex(alg, *fresh));
  sort_summands(out);
  return out;
}

namespace {

bool same_pair(const Algebra& alg, const TauRigidPair& a, const TauRigidPair& b) {
  for (std::size_t i = 0; i < a.summands.size(); ++i) {
    const auto& x = a.summands[i];
    const auto& y = b.summands[i];
    if (x.g != y.g || x.shifted_vertex != y.shifted_vertex) return false;
    if (!x.shifted_vertex && !is_isomorphic(alg, x.module, y.module)) return false;
  }
  return true;
}

}  // namespace

TauTiltingEnumeration enumerate_tau_tilting(const Algebra& alg, std::size_t max_pairs, int max_depth,
                                            std::uint64_t seed) {
  const int n = alg.vertex_count();
  TauTiltingEnumeration out;
  std::map<std::vector<GVector>, std::vector<std::size_t>> index;
  std::vector<TauRigidPair> found{projective_pair(alg)};
  index[found[0].g_vectors()].push_back(0);
  std::vector<std::size_t> frontier{0};
  std::set<std::pair<std::size_t, std::size_t>> edges;
  bool truncated = false;
  for (int depth = 0; !frontier.empty(); ++depth) {
    if (depth >= max_depth) {
      truncated = true;
      break;
    }
    // Mutations of the whole frontier are independent.
    std::vector<std::vector<TauRigidPair>> results(frontier.size());
    std::vector<std::optional<Error>> errors(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      try {
        for (int k = 0; k < n; ++k)
          results[i].push_back(mutate(alg, found[frontier[i]], k, hash_combine(seed, frontier[i] * 64 + k)));
      } catch (const Error& e) {
        errors[i] = e;
      }
    }
    for (auto& e : errors)
      if (e) throw *e;
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (auto& p : results[i]) {
        auto key = p.g_vectors();
        std::optional<std::size_t> hit;
        auto it = index.find(key);
        if (it != index.end()) {
          for (auto j : it->second)
            if (same_pair(alg, found[j], p)) hit = j;
          if (!hit) ++out.unverified_collisions;
        }
        if (!hit) {
          if (found.size() >= max_pairs) {
            truncated = true;
            continue;
          }
          hit = found.size();
          index[key].push_back(*hit);
          found.push_back(std::move(p));
          next.push_back(*hit);
        }
        edges.insert(std::minmax(frontier[i], *hit));
      }
    frontier = std::move(next);
  }
  // Deterministic order: by g-vector multiset.
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return found[a].g_vectors() < found[b].g_vectors(); });
  std::vector<std::size_t> where(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = i;
  for (auto i : order) out.pairs.push_back(found[i]);
  for (auto [a, b] : edges) out.edges.emplace_back(std::minmax(where[a], where[b]));
  std::sort(out.edges.begin(), out.edges.end());
  out.complete = !truncated;
  return out;
}

ChamberFan chamber_fan(const Algebra& alg, const TauTiltingEnumeration& e) {
  ChamberFan fan;
  fan.dim = alg.vertex_count();
  for (const auto& p : e.pairs) {
    std::vector<QVector> gens;
    for (const auto& s : p.summands) gens.push_back(to_rational(s.g));
    fan.chambers.emplace_back(fan.dim, gens);
  }
  fan.adjacency = e.edges;
  return fan;
}

std::vector<QVector> fan_rays(const ChamberFan& fan) {
  std::vector<QVector> out;
  for (const auto& c : fan.chambers) out.insert(out.end(), c.rays().begin(), c.rays().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double fan_covering_check(const ChamberFan& fan, int n_directions, std::uint64_t seed) {
  if (n_directions <= 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::vector<QVector> dirs;
  while (static_cast<int>(dirs.size()) < n_directions) {
    QVector v(fan.dim);
    bool nonzero = false;
    for (auto& x : v) {
      x = static_cast<int>(rng() % 2001) - 1000;
      nonzero = nonzero || x != 0;
    }
    if (nonzero) dirs.push_back(v);
  }
  std::vector<char> hit(dirs.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (const auto& c : fan.chambers)
      if (c.contains(dirs[i])) {
        hit[i] = 1;
        break;
      }
  return static_cast<double>(std::count(hit.begin(), hit.end(), 1)) / dirs.size();
}

}  // namespace gfan
