#pragma once

// Closed-form invariants of Ein components and their enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ein/monad.hpp"

namespace ein {

enum class Rationality { kRational, kStablyRationalAtLeast };

const char* to_string(Rationality r) noexcept;  // "rational" | "stably_rational_at_least"

std::int64_t t_value(int e, int a, int b) noexcept;
std::int64_t delta_value(const EinParams& p);
std::int64_t m_value(const EinParams& p) noexcept;
// delta + t - m; throws VerificationError if negative.
std::int64_t tau_value(const EinParams& p);

std::int64_t dim_nbar(const EinParams& p);

// Dimensions of the varieties in the rationality construction, each from its
// own binomial expansion (none derived from another).
struct AuxDims {
  std::int64_t dim_P;        // |O(c-b)|
  std::int64_t dim_r_fibre;  // fibre of R -> P
  std::int64_t dim_R;
  std::int64_t dim_ext1;     // h0(O_C(c+a-e))
  std::int64_t dim_T;
  std::int64_t rk_A;
  std::int64_t dim_U;

  bool operator==(const AuxDims&) const = default;
};

AuxDims aux_dims(const EinParams& p);

// Chern classes of the reflexive sheaf F obtained from E by elementary
// transformation along S = {f3 = 0}.
struct ReflexiveChern {
  std::int64_t c1;
  std::int64_t c2;
  std::int64_t c3;  // = length of Z = (c-a)(c-b)(c+a-e)

  bool operator==(const ReflexiveChern&) const = default;
};

ReflexiveChern reflexive_chern_classes(const EinParams& p) noexcept;

// Rational if e = a = b = 0, or (e,a) != (0,0) and c > 2a+b-e; otherwise at
// least stably rational.
Rationality classify(const EinParams& p) noexcept;

// Rationality known from earlier work for components where the structural
// rule only yields a lower bound (or needs no proof here).
struct LiteratureNote {
  Rationality status;
  std::string source;
};

std::optional<LiteratureNote> literature_note(const EinParams& p);

struct ComponentRecord {
  EinParams params;
  std::int64_t n;
  std::int64_t dim;
  Rationality status;
  std::int64_t t, delta, m, tau;
  AuxDims aux;
  ReflexiveChern chern_F;
  // Basis of the classification, e.g. "rationality construction" or a note
  // that the case is only checked against the reference tables.
  std::string basis;
  std::optional<LiteratureNote> literature;

  // literature->status when present, else status.
  Rationality effective_status() const noexcept {
    return literature ? literature->status : status;
  }
};

ComponentRecord make_record(const EinParams& p);

// All admissible (a,b,c) with c^2 - a^2 - b^2 - e(c-a-b) = n, ordered by
// (a,b,c). Throws PreconditionError unless e in {-1,0} and n >= 1.
std::vector<ComponentRecord> enumerate(int e, std::int64_t n);

struct TableRow {
  std::int64_t n;
  std::vector<ComponentRecord> components;
};

// enumerate(e, n) for n = 1..n_max (even n only when e = -1).
std::vector<TableRow> section_table(int e, std::int64_t n_max);

nlohmann::json to_json(const ComponentRecord& r);
nlohmann::json to_json(const std::vector<TableRow>& table, int e);

// One row per component; n with no components get a single "none" row.
std::string to_markdown(const std::vector<TableRow>& table, int e);
std::string to_markdown(const ComponentRecord& r);

}  // namespace ein
