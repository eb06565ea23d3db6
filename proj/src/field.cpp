#include "gfan/field.hpp"

#include "gfan/error.hpp"

namespace gfan {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::CompletionOverflow: return "CompletionOverflow";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotProjective: return "NotProjective";
    case ErrorCode::SplitUncertain: return "SplitUncertain";
    case ErrorCode::NoConsensus: return "NoConsensus";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotTauRigid: return "NotTauRigid";
    case ErrorCode::ApproximationFailed: return "ApproximationFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_p");
  // Extended Euclid.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace gfan
