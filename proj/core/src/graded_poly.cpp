#include "ein/graded_poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "ein/errors.hpp"
#include "ein/seed.hpp"

namespace ein {
namespace {

// Number of monomials of degree d in 3 variables.
std::size_t dim3(int d) noexcept {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

int total_degree(const Exponents& e) noexcept { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

std::size_t dim_forms(int d) noexcept {
  if (d < 0) return 0;
  const auto x = static_cast<std::size_t>(d);
  return (x + 1) * (x + 2) * (x + 3) / 6;
}

std::int64_t euler_char_line_bundle(int d) noexcept {
  const std::int64_t x = d;
  return (x + 1) * (x + 2) * (x + 3) / 6;
}

MonomialBasis::MonomialBasis(int degree) : degree_(degree) {
  if (degree < 0) return;
  monomials_.reserve(dim_forms(degree));
  for (int e0 = degree; e0 >= 0; --e0)
    for (int e1 = degree - e0; e1 >= 0; --e1)
      for (int e2 = degree - e0 - e1; e2 >= 0; --e2)
        monomials_.push_back({e0, e1, e2, degree - e0 - e1 - e2});
}

std::size_t MonomialBasis::index_of(const Exponents& e) noexcept {
  const int d = total_degree(e);
  const int r1 = d - e[0];   // degree left for x1..x3
  const int r2 = r1 - e[1];  // degree left for x2, x3
  // Monomials with a larger x0 exponent, then same x0 and larger x1, then
  // same x0, x1 and larger x2.
  return dim_forms(d - e[0] - 1) + dim3(r1 - e[1] - 1) + static_cast<std::size_t>(r2 - e[2]);
}

HomogeneousForm HomogeneousForm::zero(int degree) {
  return HomogeneousForm{degree, std::vector<Residue>(dim_forms(degree), 0)};
}

HomogeneousForm HomogeneousForm::constant(Residue c) { return HomogeneousForm{0, {c}}; }

HomogeneousForm HomogeneousForm::from_terms(int degree, std::initializer_list<Term> terms,
                                            const PrimeField& field) {
  HomogeneousForm f = zero(degree);
  for (const Term& t : terms) {
    if (total_degree(t.exps) != degree || std::any_of(t.exps.begin(), t.exps.end(), [](int x) { return x < 0; })) {
      throw PreconditionError("term degree does not match form degree");
    }
    auto& slot = f.coeffs[MonomialBasis::index_of(t.exps)];
    slot = field.add(slot, field.reduce(t.coeff));
  }
  return f;
}

HomogeneousForm HomogeneousForm::monomial(const Exponents& e, Residue coeff) {
  HomogeneousForm f = zero(total_degree(e));
  f.coeffs[MonomialBasis::index_of(e)] = coeff;
  return f;
}

bool HomogeneousForm::is_zero() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Residue c) { return c == 0; });
}

Residue HomogeneousForm::coeff(const Exponents& e) const noexcept {
  if (total_degree(e) != degree) return 0;
  return coeffs[MonomialBasis::index_of(e)];
}

HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g, const PrimeField& field) {
  if (f.degree != g.degree) throw PreconditionError("add: degree mismatch");
  HomogeneousForm out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = field.add(out.coeffs[i], g.coeffs[i]);
  return out;
}

HomogeneousForm subtract(const HomogeneousForm& f, const HomogeneousForm& g, const PrimeField& field) {
  if (f.degree != g.degree) throw PreconditionError("subtract: degree mismatch");
  HomogeneousForm out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = field.sub(out.coeffs[i], g.coeffs[i]);
  return out;
}

HomogeneousForm scale(const HomogeneousForm& f, Residue s, const PrimeField& field) {
  HomogeneousForm out = f;
  for (auto& c : out.coeffs) c = field.mul(c, s);
  return out;
}

HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g, const PrimeField& field) {
  if (f.degree < 0 || g.degree < 0) return HomogeneousForm{f.degree + g.degree, {}};
  HomogeneousForm out = HomogeneousForm::zero(f.degree + g.degree);
  const MonomialBasis fb(f.degree);
  const MonomialBasis gb(g.degree);
  for (std::size_t i = 0; i < fb.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (g.coeffs[j] == 0) continue;
      Exponents e;
      for (int v = 0; v < kNumVars; ++v) e[v] = fb[i][v] + gb[j][v];
      auto& slot = out.coeffs[MonomialBasis::index_of(e)];
      slot = field.add(slot, field.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return out;
}

Residue evaluate(const HomogeneousForm& f, const std::array<Residue, kNumVars>& point,
                 const PrimeField& field) {
  const MonomialBasis basis(f.degree);
  Residue acc = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    Residue term = f.coeffs[i];
    for (int v = 0; v < kNumVars; ++v) term = field.mul(term, field.pow(point[v], basis[i][v]));
    acc = field.add(acc, term);
  }
  return acc;
}

FpMatrix mult_map(const HomogeneousForm& f, int src_deg, const PrimeField& /*field*/) {
  if (f.degree < 0) throw PreconditionError("mult_map: form of negative degree");
  const int dst_deg = src_deg + f.degree;
  const MonomialBasis src(src_deg);
  FpMatrix m(dim_forms(dst_deg), src.size());
  if (src.size() == 0) return m;

  const MonomialBasis fb(f.degree);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < fb.size(); ++i)
    if (f.coeffs[i] != 0) support.push_back(i);

  for (std::size_t col = 0; col < src.size(); ++col) {
    for (std::size_t i : support) {
      Exponents e;
      for (int v = 0; v < kNumVars; ++v) e[v] = src[col][v] + fb[i][v];
      // Distinct monomials of f land in distinct rows, so plain assignment.
      m(MonomialBasis::index_of(e), col) = f.coeffs[i];
    }
  }
  return m;
}

HomogeneousForm random_form(int degree, std::uint64_t seed, const PrimeField& field) {
  if (degree < 0) throw PreconditionError("random_form: negative degree");
  std::mt19937_64 gen(seed);
  HomogeneousForm f = HomogeneousForm::zero(degree);
  for (auto& c : f.coeffs) c = uniform_residue(gen, field.p());
  return f;
}

std::array<HomogeneousForm, kNumVars> partials(const HomogeneousForm& f, const PrimeField& field) {
  if (f.degree < 1) throw PreconditionError("non-differentiable degree");
  std::array<HomogeneousForm, kNumVars> out;
  for (auto& g : out) g = HomogeneousForm::zero(f.degree - 1);
  const MonomialBasis basis(f.degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    for (int v = 0; v < kNumVars; ++v) {
      const int k = basis[i][v];
      if (k == 0) continue;
      Exponents e = basis[i];
      --e[v];
      auto& slot = out[v].coeffs[MonomialBasis::index_of(e)];
      slot = field.add(slot, field.mul(f.coeffs[i], field.reduce(k)));
    }
  }
  return out;
}

nlohmann::json to_json(const HomogeneousForm& f) {
  return nlohmann::json{{"degree", f.degree}, {"coeffs", f.coeffs}};
}

HomogeneousForm form_from_json(const nlohmann::json& j, const PrimeField& field) {
  HomogeneousForm f;
  f.degree = j.at("degree").get<int>();
  const auto raw = j.at("coeffs").get<std::vector<std::int64_t>>();
  if (raw.size() != dim_forms(f.degree)) throw PreconditionError("coefficient count does not match degree");
  f.coeffs.reserve(raw.size());
  for (std::int64_t v : raw) f.coeffs.push_back(field.reduce(v));
  return f;
}

}  // namespace ein
