#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ein/monad.hpp"
#include "ein/prime_field.hpp"

namespace ein::cli {

struct Mismatch {
  int m;
  std::int64_t computed;
  std::int64_t expected;
};

// All checks for one seeded monad.
struct TrialResult {
  int index = 0;
  std::uint64_t seed = 0;
  bool constructed = false;
  std::string construction_error;
  int attempts = 0;

  bool composition_ok = false;     // mu o lambda == 0
  bool h1_minus_c_ok = false;      // h1(E(-c)) == 1
  bool h1_closed_form_ok = false;  // h1(E(m)) == closed form, m in [-c, -1]
  bool stability_ok = false;       // h0(E(m)) == 0, m in [-3, 0]
  bool chi_ok = false;             // chi identity, m in [-c-4, c]
  std::vector<Mismatch> h1_mismatches;
  std::optional<nlohmann::json> monad;

  bool pass() const noexcept {
    return constructed && composition_ok && h1_minus_c_ok && h1_closed_form_ok && stability_ok && chi_ok;
  }
};

struct VerifyReport {
  EinParams params;
  std::uint32_t prime;
  std::uint64_t master_seed;
  std::vector<TrialResult> trials;

  int passed() const noexcept;
  // Strict majority of trials pass.
  bool majority_pass() const noexcept;
};

// Trial t uses monad seed derive_seed(master_seed, t). Trials run
// concurrently; results are ordered by trial index.
VerifyReport verify_monad(const EinParams& params, const PrimeField& field, std::uint64_t master_seed,
                          int trials, const MonadOptions& options = {});

TrialResult verify_trial(const EinParams& params, const PrimeField& field, std::uint64_t seed, int index,
                         const MonadOptions& options = {});

nlohmann::json to_json(const VerifyReport& report);
std::string to_markdown(const VerifyReport& report);

}  // namespace ein::cli
