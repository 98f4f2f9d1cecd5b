#pragma once

#include <cstdint>
#include <random>

#include "ein/prime_field.hpp"

namespace ein {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Child seed for stream `index` under `parent`:
//   mix64(parent ^ mix64(index + 0x9e3779b97f4a7c15)).
// Used for trial -> attempt -> form seeds, so adding trials or attempts never
// perturbs streams that already exist.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept;

// Uniform residue in [0, p) by rejection from 64-bit draws.
Residue uniform_residue(std::mt19937_64& gen, std::uint32_t p);

}  // namespace ein
