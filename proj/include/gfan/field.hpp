#pragma once

#include <cstdint>
#include <random>

namespace gfan {

using Scalar = std::uint32_t;

/// Arithmetic in the prime field F_p, p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  Scalar reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;

  /// Signed representative in (-p/2, p/2], used for printing.
  std::int64_t centered(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  Scalar random(std::mt19937_64& rng) const {
    return static_cast<Scalar>(rng() % p_);
  }
  Scalar random_nonzero(std::mt19937_64& rng) const {
    return static_cast<Scalar>(1 + rng() % (p_ - 1));
  }

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace gfan
