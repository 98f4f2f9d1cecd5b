#pragma once

#include <cstdint>

namespace ein {

using Residue = std::uint32_t;

// Arithmetic in F_p for an odd prime p < 2^31. Residues are kept in [0, p),
// so the product of two residues fits in 64 bits.
class PrimeField {
public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  // Throws PreconditionError unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t p() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue x, Residue y) const noexcept {
    const std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue x, Residue y) const noexcept {
    return x >= y ? x - y : x + p_ - y;
  }
  Residue neg(Residue x) const noexcept { return x == 0 ? 0 : p_ - x; }
  Residue mul(Residue x, Residue y) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(x) * y % p_);
  }
  Residue pow(Residue x, std::uint64_t k) const noexcept;
  // Inverse of a nonzero residue (Fermat).
  Residue inv(Residue x) const;

  bool operator==(const PrimeField& other) const noexcept = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace ein
