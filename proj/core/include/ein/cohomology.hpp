#pragma once

// Cohomology of the bundle E of a null correlation monad, without ever
// building E. Split the monad into its display
//
//   0 -> K -> H -> O(c) -> 0,        K = ker mu,
//   0 -> O(e-c) -> K -> E -> 0,
//
// and twist by m. Line bundles on P^3 have H^1 = H^2 = 0, so
//
//   h0(K(m)) = dim ker mu_*,   h1(K(m)) = dim coker mu_*,
//
// where mu_* : H^0(H(m)) -> H^0(O(c+m)) is the block matrix
// [f1 | f2 | f3 | f4] on R_{a+m} + R_{-a+e+m} + R_{b+m} + R_{-b+e+m}.
// From the second sequence (again H^1 of the line bundle vanishes):
//
//   h0(E(m)) = h0(K(m)) - h0(O(e-c+m)),   h1(E(m)) = h1(K(m)).
//
// E is rank 2 with det E = O(e), so E^dual = E(-e) and Serre duality gives
//
//   h2(E(m)) = h1(E(-e-4-m)),   h3(E(m)) = h0(E(-e-4-m)).
//
// chi(E(m)) is additive over the display, which gives an independent check.

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ein/fp_matrix.hpp"
#include "ein/monad.hpp"

namespace ein {

struct CohomologyRecord {
  int m = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  std::int64_t h3 = 0;
  std::int64_t chi = 0;

  bool operator==(const CohomologyRecord&) const = default;
};

// Block row [mult(f1) | mult(f2) | mult(f3) | mult(f4)] into R_{c+m}; blocks
// with negative source degree have no columns.
FpMatrix mu_star_matrix(const NullCorrelationMonad& monad, int m, const PrimeField& field);

// chi(O(a+m)) + chi(O(-a+e+m)) + chi(O(b+m)) + chi(O(-b+e+m))
//   - chi(O(c+m)) - chi(O(e-c+m)).
std::int64_t monad_euler_char(const EinParams& params, int m) noexcept;

// Throws VerificationError("display exactness violated") if the computed
// h0-h1+h2-h3 disagrees with monad_euler_char, or if h0 comes out negative.
CohomologyRecord h_all(const NullCorrelationMonad& monad, int m, const PrimeField& field);

// Records for m_lo..m_hi (empty if m_lo > m_hi), computed concurrently per m;
// the result is ordered by m.
std::vector<CohomologyRecord> cohomology_table(const NullCorrelationMonad& monad, int m_lo, int m_hi,
                                               const PrimeField& field);

// h0(E(m)) == 0 for all m in [m_min, 0]. Throws PreconditionError for m_min > 0.
bool stability_check(const NullCorrelationMonad& monad, int m_min, const PrimeField& field);

// h1(E(m)) = h0(O(c+m)) - h0(O(a+m)) - h0(O(b+m)) for m <= -1.
// Throws PreconditionError for m > -1.
std::int64_t h1_closed_form(const EinParams& params, int m);

// True when h1(E(-b)) must be read from the general formula because a = b > 0
// (the shortcut C(c-b+3,3) - 1 leaves out the h0(O(a-b)) term).
bool h1_minus_b_needs_flag(const EinParams& params) noexcept;

// h0(I_C(d)) for the complete intersection C = {f1 = f3 = 0}: the rank of
// (g1, g3) -> g1 f1 + g3 f3 from R_{d-d1} + R_{d-d3} to R_d, checked against
// dim_forms(d-d1) + dim_forms(d-d3) - dim_forms(d-d1-d3). Throws
// VerificationError("non-generic pair (common factor?)") on disagreement.
std::int64_t h0_ideal_curve(const HomogeneousForm& f1, const HomogeneousForm& f3, int d,
                            const PrimeField& field);

nlohmann::json to_json(const CohomologyRecord& r);

}  // namespace ein
