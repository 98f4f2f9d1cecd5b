#include "ein/seed.hpp"

#include <limits>

namespace ein {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  return mix64(parent ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

Residue uniform_residue(std::mt19937_64& gen, std::uint32_t p) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % p;  // draws >= limit are rejected
  std::uint64_t draw;
  do {
    draw = gen();
  } while (draw >= limit);
  return static_cast<Residue>(draw % p);
}

}  // namespace ein
