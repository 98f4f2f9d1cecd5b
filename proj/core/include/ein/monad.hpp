#pragma once

// Generalized null correlation monads
//
//   0 -> O(e-c) --lambda--> O(a) + O(-a+e) + O(b) + O(-b+e) --mu--> O(c) -> 0,
//   lambda = (f2, -f1, f4, -f3)^t,  mu = (f1, f2, f3, f4),
//
// with deg f1 = c-a, deg f2 = c+a-e, deg f3 = c-b, deg f4 = c+b-e. The
// cohomology of the monad is a rank-2 bundle as soon as f1..f4 have no common
// zero in P^3.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ein/graded_poly.hpp"
#include "ein/prime_field.hpp"

namespace ein {

// Admissible (e,a,b,c): e in {-1,0}, b >= a >= 0, c > a+b.
class EinParams {
public:
  // Throws InvalidParams naming the violated constraint.
  static EinParams make(int e, int a, int b, int c);

  int e() const noexcept { return e_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int c() const noexcept { return c_; }

  // Second Chern class n = c^2 - a^2 - b^2 - e(c - a - b).
  std::int64_t n() const noexcept;

  // Degrees of f1..f4.
  std::array<int, 4> form_degrees() const noexcept;
  // Twists of the four summands of H: a, -a+e, b, -b+e.
  std::array<int, 4> summand_twists() const noexcept;

  bool operator==(const EinParams&) const = default;

private:
  EinParams(int e, int a, int b, int c) : e_(e), a_(a), b_(b), c_(c) {}
  int e_, a_, b_, c_;
};

struct NullCorrelationMonad {
  EinParams params;
  std::uint32_t prime;
  std::uint64_t seed = 0;
  int attempts = 1;  // sampling attempts used by random_monad
  std::array<HomogeneousForm, 4> f;  // f[0] = f1, ..., f[3] = f4

  const HomogeneousForm& f1() const noexcept { return f[0]; }
  const HomogeneousForm& f2() const noexcept { return f[1]; }
  const HomogeneousForm& f3() const noexcept { return f[2]; }
  const HomogeneousForm& f4() const noexcept { return f[3]; }
};

// Wraps caller-chosen forms; throws PreconditionError on degree mismatch.
NullCorrelationMonad make_monad(const EinParams& params, std::array<HomogeneousForm, 4> forms,
                                const PrimeField& field);

// mu o lambda = f1 f2 - f2 f1 + f3 f4 - f4 f3, checked coefficientwise.
bool composition_vanishes(const NullCorrelationMonad& monad, const PrimeField& field);

enum class ZeroLocus { kEmpty, kNonempty, kUndetermined };

struct BasepointCheck {
  ZeroLocus locus;
  // Degree D at which the ideal filled R_D (kEmpty), or the last degree tried.
  int degree;

  bool empty() const noexcept { return locus == ZeroLocus::kEmpty; }
};

// Decides whether the forms have a common zero over the algebraic closure.
//
// The ideal I = (g_1..g_k) has empty zero locus iff I_D = R_D for some D,
// i.e. iff [mult(g_1) | ... | mult(g_k)] : (+) R_{D-d_i} -> R_D is surjective.
// Degrees D are tried in ascending order up to a bound:
//  - k == 4: D* = d1+d2+d3+d4-3. An empty locus makes the forms a regular
//    sequence whose quotient is nonzero exactly in degrees [0, D*-1], so only
//    D* is tested and failure there is a certified kNonempty.
//  - k < 4: a common zero always exists (height bound); kNonempty at once.
//  - k > 4: D* = 4*max(d_i)-3 (four general elements of I_{max d_i} form a
//    regular sequence when the locus is empty). `degree_cap` lowers the
//    search bound; failure below D* is kUndetermined.
// Degree-0 forms: a nonzero constant gives kEmpty at degree 0, a zero one is
// dropped. Identically zero forms of positive degree are dropped as well.
BasepointCheck is_basepoint_free(std::span<const HomogeneousForm> forms, const PrimeField& field,
                                 std::optional<int> degree_cap = std::nullopt);

// Whether the degree-D piece of the ideal (forms) is all of R_D. Once true it
// stays true for every larger D.
bool ideal_fills_degree(std::span<const HomogeneousForm> forms, int degree, const PrimeField& field);

enum class Smoothness { kSmooth, kSingular, kUndetermined };

const char* to_string(ZeroLocus v) noexcept;
const char* to_string(Smoothness v) noexcept;

// Jacobian criterion on {f = 0}: smooth iff the partials have no common zero.
// Requires p not dividing deg f (then f lies in its Jacobian ideal);
// otherwise throws PreconditionError.
Smoothness is_smooth_hypersurface(const HomogeneousForm& f, const PrimeField& field);

// Jacobian criterion for the complete intersection {f1 = f3 = 0}: smooth iff
// f1, f3 and the six 2x2 minors of the Jacobian of (f1, f3) have no common
// zero. Default cap: d1+d3+2(d1+d3-2)-3, raised to the certified bound of
// is_basepoint_free.
Smoothness is_smooth_ci_curve(const HomogeneousForm& f1, const HomogeneousForm& f3,
                              const PrimeField& field, std::optional<int> degree_cap = std::nullopt);

struct MonadOptions {
  int max_retries = 16;
  bool require_smoothness = true;
};

// Samples f1..f4 with random_form until the base locus is empty and, with
// require_smoothness, {f3 = 0} and {f1 = f3 = 0} are smooth. Attempt k uses
// seed derive_seed(seed, k); form i within it uses derive_seed(that, i).
// Throws PreconditionError when p <= 4c, ConstructionError when retries run out.
NullCorrelationMonad random_monad(const EinParams& params, const PrimeField& field,
                                  std::uint64_t seed, const MonadOptions& options = {});

nlohmann::json to_json(const EinParams& params);
// {"e","a","b","c","p","seed","f1".."f4"}; forms as coefficient arrays.
nlohmann::json to_json(const NullCorrelationMonad& monad);
NullCorrelationMonad monad_from_json(const nlohmann::json& j);

}  // namespace ein
