#include "ein/prime_field.hpp"

#include <string>

#include "ein/errors.hpp"

namespace ein {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

Residue PrimeField::pow(Residue x, std::uint64_t k) const noexcept {
  Residue result = 1;
  while (k > 0) {
    if (k & 1) result = mul(result, x);
    x = mul(x, x);
    k >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue x) const {
  if (x % p_ == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p_));
  return pow(x, p_ - 2);
}

}  // namespace ein
