#include "gfan/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace gfan {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

const Poly kX = {0, 1};

}  // namespace

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.add(c[i], b[i]);
  trim(c);
  return c;
}

Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.sub(c[i], b[i]);
  trim(c);
  return c;
}

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

namespace {

void divmod(const PrimeField& f, Poly a, const Poly& m, Poly* quot, Poly* rem) {
  assert(!m.empty());
  const Scalar lead_inv = f.inv(m.back());
  const std::size_t dm = m.size() - 1;
  Poly q(a.size() >= m.size() ? a.size() - dm : 0, 0);
  trim(a);
  while (a.size() >= m.size()) {
    const std::size_t shift = a.size() - m.size();
    const Scalar c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  trim(q);
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(a);
}

}  // namespace

Poly poly_mod(const PrimeField& f, const Poly& a, const Poly& m) {
  Poly r;
  divmod(f, a, m, nullptr, &r);
  return r;
}

Poly poly_div(const PrimeField& f, const Poly& a, const Poly& m) {
  Poly q;
  divmod(f, a, m, &q, nullptr);
  return q;
}

Poly poly_monic(const PrimeField& f, const Poly& a) {
  if (a.empty()) return a;
  const Scalar inv = f.inv(a.back());
  Poly b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = f.mul(a[i], inv);
  return b;
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Poly poly_derivative(const PrimeField& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(a[i], f.reduce(static_cast<std::int64_t>(i)));
  trim(d);
  return d;
}

Poly poly_powmod(const PrimeField& f, const Poly& a, std::uint64_t e, const Poly& m) {
  Poly result = poly_mod(f, Poly{1}, m);
  Poly base = poly_mod(f, a, m);
  while (e) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), m);
    e >>= 1;
    if (e) base = poly_mod(f, poly_mul(f, base, base), m);
  }
  return result;
}

namespace {

// a(x) = b(x^p) with every coefficient fixed by Frobenius, so a = b^p.
Poly pth_root(const PrimeField& f, const Poly& a) {
  const std::size_t p = f.prime();
  Poly b(a.size() / p + 1, 0);
  for (std::size_t i = 0; i < a.size(); i += p) b[i / p] = a[i];
  trim(b);
  return b;
}

}  // namespace

Poly squarefree_part(const PrimeField& f, const Poly& a) {
  Poly m = poly_monic(f, a);
  if (degree(m) <= 0) return m.empty() ? m : Poly{1};
  Poly d = poly_derivative(f, m);
  if (d.empty()) return squarefree_part(f, pth_root(f, m));
  Poly g = poly_gcd(f, m, d);
  Poly s = poly_div(f, m, g);  // product of factors with multiplicity prime to p
  // Factors whose multiplicity is divisible by p survive only in g.
  Poly rest = g;
  for (;;) {
    Poly c = poly_gcd(f, rest, s);
    if (degree(c) <= 0) break;
    rest = poly_div(f, rest, c);
    while (degree(poly_gcd(f, rest, c)) > 0) rest = poly_div(f, rest, poly_gcd(f, rest, c));
  }
  if (degree(rest) > 0) {
    Poly extra = squarefree_part(f, rest);
    s = poly_mul(f, s, poly_div(f, extra, poly_gcd(f, extra, s)));
  }
  return poly_monic(f, s);
}

namespace {

// x^{p^d} mod m given x^{p^{d-1}} mod m.
Poly frobenius(const PrimeField& f, const Poly& a, const Poly& m) { return poly_powmod(f, a, f.prime(), m); }

std::optional<Poly> equal_degree_split(const PrimeField& f, const Poly& a, int d, std::mt19937_64& rng) {
  const int n = degree(a);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Poly r(n, 0);
    for (auto& c : r) c = f.random(rng);
    trim(r);
    if (degree(r) <= 0) continue;
    Poly h;
    if (f.prime() == 2) {
      // Trace map r + r^2 + ... + r^{2^{d-1}}.
      Poly t = r;
      h = r;
      for (int i = 1; i < d; ++i) {
        t = poly_mod(f, poly_mul(f, t, t), a);
        h = poly_add(f, h, t);
      }
    } else {
      // r^{(p^d-1)/2} = (r * r^p * ... * r^{p^{d-1}})^{(p-1)/2}.
      Poly norm = r;
      Poly t = r;
      for (int i = 1; i < d; ++i) {
        t = frobenius(f, t, a);
        norm = poly_mod(f, poly_mul(f, norm, t), a);
      }
      h = poly_sub(f, poly_powmod(f, norm, (f.prime() - 1) / 2, a), Poly{1});
    }
    Poly g = poly_gcd(f, a, h);
    if (degree(g) > 0 && degree(g) < n) return g;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Poly> nontrivial_factor(const PrimeField& f, const Poly& a, std::mt19937_64& rng) {
  Poly m = poly_monic(f, a);
  const int n = degree(m);
  if (n <= 1) return std::nullopt;
  Poly d = poly_derivative(f, m);
  if (d.empty()) {
    Poly root = pth_root(f, m);
    if (auto inner = nontrivial_factor(f, root, rng)) return inner;
    return std::nullopt;  // power of a single irreducible
  }
  Poly g = poly_gcd(f, m, d);
  if (degree(g) > 0) {
    Poly s = squarefree_part(f, m);
    if (degree(s) < n) {
      if (auto inner = nontrivial_factor(f, s, rng)) return inner;
      return std::nullopt;
    }
  }
  // Squarefree: distinct-degree factorization.
  Poly xp = poly_mod(f, kX, m);
  for (int deg = 1; 2 * deg <= n; ++deg) {
    xp = frobenius(f, xp, m);
    Poly h = poly_gcd(f, m, poly_sub(f, xp, kX));
    if (degree(h) <= 0) continue;
    if (degree(h) < n) return h;
    return equal_degree_split(f, m, deg, rng);
  }
  return std::nullopt;
}

bool is_irreducible(const PrimeField& f, const Poly& a, std::mt19937_64& rng) {
  if (degree(a) < 1) return false;
  if (degree(squarefree_part(f, a)) != degree(a)) return false;
  return !nontrivial_factor(f, a, rng).has_value();
}

Poly characteristic_polynomial(const PrimeField& f, const Matrix& input) {
  const std::size_t n = input.rows();
  assert(n == input.cols());
  Matrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h(piv, k) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
    }
    const Scalar inv = f.inv(h(k + 1, k));
    for (std::size_t i = k + 2; i < n; ++i) {
      const Scalar c = f.mul(h(i, k), inv);
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(c, h(k + 1, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, k + 1) = f.add(h(r, k + 1), f.mul(c, h(r, i)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = poly_mul(f, Poly{f.neg(h(k - 1, k - 1)), 1}, p[k - 1]);
    Scalar prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod == 0) break;
      const Scalar c = f.mul(prod, h(i, k - 1));
      p[k] = poly_sub(f, p[k], poly_mul(f, Poly{c}, p[i]));
    }
  }
  return p[n];
}

Matrix evaluate(const PrimeField& f, const Poly& p, const Matrix& m) {
  Matrix result(m.rows(), m.cols());
  for (std::size_t i = p.size(); i-- > 0;) {
    result = multiply(f, result, m);
    for (std::size_t d = 0; d < m.rows(); ++d) result(d, d) = f.add(result(d, d), p[i]);
  }
  return result;
}

}  // namespace gfan
