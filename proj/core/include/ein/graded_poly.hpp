#pragma once

// Graded pieces R_d of F_p[x0, x1, x2, x3].
//
// Monomials of a fixed degree are ordered graded-lexicographically with
// x0 > x1 > x2 > x3: for degree 2 the basis is
//   x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2.
// Every matrix built here uses this order for rows and columns.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ein/fp_matrix.hpp"
#include "ein/prime_field.hpp"

namespace ein {

inline constexpr int kNumVars = 4;

using Exponents = std::array<int, kNumVars>;

// C(d+3, 3) for d >= 0, else 0.
std::size_t dim_forms(int d) noexcept;

// chi(O_P3(d)) = (d+1)(d+2)(d+3)/6, valid for every d.
std::int64_t euler_char_line_bundle(int d) noexcept;

class MonomialBasis {
public:
  explicit MonomialBasis(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Exponents>& monomials() const noexcept { return monomials_; }
  const Exponents& operator[](std::size_t i) const noexcept { return monomials_[i]; }

  // Position of a monomial within the basis of its own degree; closed form,
  // no lookup table.
  static std::size_t index_of(const Exponents& e) noexcept;

private:
  int degree_;
  std::vector<Exponents> monomials_;
};

struct Term {
  std::int64_t coeff;
  Exponents exps;
};

struct HomogeneousForm {
  int degree = 0;
  // Indexed by MonomialBasis(degree); empty when degree < 0.
  std::vector<Residue> coeffs;

  static HomogeneousForm zero(int degree);
  static HomogeneousForm constant(Residue c);
  // Sums the given terms; every term must have total degree `degree`.
  static HomogeneousForm from_terms(int degree, std::initializer_list<Term> terms,
                                    const PrimeField& field);
  static HomogeneousForm monomial(const Exponents& e, Residue coeff = 1);

  bool is_zero() const noexcept;
  Residue coeff(const Exponents& e) const noexcept;

  bool operator==(const HomogeneousForm&) const = default;
};

HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g, const PrimeField& field);
HomogeneousForm subtract(const HomogeneousForm& f, const HomogeneousForm& g, const PrimeField& field);
HomogeneousForm scale(const HomogeneousForm& f, Residue s, const PrimeField& field);
HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g, const PrimeField& field);

Residue evaluate(const HomogeneousForm& f, const std::array<Residue, kNumVars>& point,
                 const PrimeField& field);

// Matrix of g -> f*g from R_src_deg to R_{src_deg + deg f}. For src_deg < 0 the
// result has dim_forms(src_deg + deg f) rows and no columns.
FpMatrix mult_map(const HomogeneousForm& f, int src_deg, const PrimeField& field);

// Coefficients i.i.d. uniform on F_p from mt19937_64(seed).
HomogeneousForm random_form(int degree, std::uint64_t seed, const PrimeField& field);

// The four partial derivatives. Throws PreconditionError ("non-differentiable
// degree") for degree < 1.
std::array<HomogeneousForm, kNumVars> partials(const HomogeneousForm& f, const PrimeField& field);

// {"degree": d, "coeffs": [...]}
nlohmann::json to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const nlohmann::json& j, const PrimeField& field);

}  // namespace ein
