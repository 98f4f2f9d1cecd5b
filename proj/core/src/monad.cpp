#include "ein/monad.hpp"

#include <algorithm>
#include <vector>

#include <nlohmann/json.hpp>

#include "ein/errors.hpp"
#include "ein/seed.hpp"

namespace ein {

EinParams EinParams::make(int e, int a, int b, int c) {
  if (e != 0 && e != -1) throw InvalidParams("e in {-1, 0} violated");
  if (a < 0) throw InvalidParams("a >= 0 violated");
  if (b < a) throw InvalidParams("b >= a violated");
  if (c <= a + b) throw InvalidParams("c > a + b violated");
  EinParams p(e, a, b, c);
  // Both follow from the constraints above; kept as consistency checks.
  if (p.n() <= 0) throw InvalidParams("n > 0 violated");
  if (e == -1 && p.n() % 2 != 0) throw InvalidParams("n even for e = -1 violated");
  return p;
}

std::int64_t EinParams::n() const noexcept {
  const std::int64_t e = e_, a = a_, b = b_, c = c_;
  return c * c - a * a - b * b - e * (c - a - b);
}

std::array<int, 4> EinParams::form_degrees() const noexcept {
  return {c_ - a_, c_ + a_ - e_, c_ - b_, c_ + b_ - e_};
}

std::array<int, 4> EinParams::summand_twists() const noexcept {
  return {a_, -a_ + e_, b_, -b_ + e_};
}

NullCorrelationMonad make_monad(const EinParams& params, std::array<HomogeneousForm, 4> forms,
                                const PrimeField& field) {
  const auto degs = params.form_degrees();
  for (std::size_t i = 0; i < 4; ++i) {
    if (forms[i].degree != degs[i] || forms[i].coeffs.size() != dim_forms(degs[i])) {
      throw PreconditionError("f" + std::to_string(i + 1) + " must have degree " + std::to_string(degs[i]));
    }
  }
  return NullCorrelationMonad{params, field.p(), 0, 1, std::move(forms)};
}

bool composition_vanishes(const NullCorrelationMonad& monad, const PrimeField& field) {
  // mu o lambda = f1*f2 + f2*(-f1) + f3*f4 + f4*(-f3)
  const auto& f = monad.f;
  HomogeneousForm sum = multiply(f[0], f[1], field);
  sum = subtract(sum, multiply(f[1], f[0], field), field);
  const HomogeneousForm tail = subtract(multiply(f[2], f[3], field), multiply(f[3], f[2], field), field);
  sum = add(sum, tail, field);
  return sum.is_zero();
}

const char* to_string(ZeroLocus v) noexcept {
  switch (v) {
    case ZeroLocus::kEmpty: return "empty";
    case ZeroLocus::kNonempty: return "nonempty";
    case ZeroLocus::kUndetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(Smoothness v) noexcept {
  switch (v) {
    case Smoothness::kSmooth: return "smooth";
    case Smoothness::kSingular: return "singular";
    case Smoothness::kUndetermined: return "undetermined";
  }
  return "?";
}

bool ideal_fills_degree(std::span<const HomogeneousForm> forms, int degree, const PrimeField& field) {
  std::vector<FpMatrix> blocks;
  blocks.reserve(forms.size());
  for (const auto& g : forms) blocks.push_back(mult_map(g, degree - g.degree, field));
  FpMatrix m = hconcat(blocks, dim_forms(degree));
  if (m.cols() < m.rows()) return false;
  return rank_in_place(m, field) == m.rows();
}

BasepointCheck is_basepoint_free(std::span<const HomogeneousForm> forms, const PrimeField& field,
                                 std::optional<int> degree_cap) {
  if (forms.empty()) throw PreconditionError("is_basepoint_free: no forms");
  std::vector<HomogeneousForm> active;
  for (const auto& g : forms) {
    if (g.degree < 0) throw PreconditionError("is_basepoint_free: negative degree form");
    if (g.is_zero()) continue;
    if (g.degree == 0) return {ZeroLocus::kEmpty, 0};
    active.push_back(g);
  }
  if (active.size() < static_cast<std::size_t>(kNumVars)) {
    return {ZeroLocus::kNonempty, 0};
  }

  int min_deg = active.front().degree;
  int max_deg = active.front().degree;
  int sum_deg = 0;
  for (const auto& g : active) {
    min_deg = std::min(min_deg, g.degree);
    max_deg = std::max(max_deg, g.degree);
    sum_deg += g.degree;
  }
  const int certified = active.size() == static_cast<std::size_t>(kNumVars) ? sum_deg - (kNumVars - 1)
                                                                            : kNumVars * max_deg - (kNumVars - 1);
  const int bound = degree_cap ? std::min(*degree_cap, certified) : certified;

  // Four forms with empty locus are a regular sequence, and the quotient is
  // nonzero in every degree below D*; D* is the only degree worth testing.
  const int first = active.size() == static_cast<std::size_t>(kNumVars) && bound == certified ? certified : min_deg;
  for (int d = first; d <= bound; ++d) {
    if (ideal_fills_degree(active, d, field)) return {ZeroLocus::kEmpty, d};
  }
  return {bound >= certified ? ZeroLocus::kNonempty : ZeroLocus::kUndetermined, bound};
}

namespace {

Smoothness smoothness_from(const BasepointCheck& check) noexcept {
  switch (check.locus) {
    case ZeroLocus::kEmpty: return Smoothness::kSmooth;
    case ZeroLocus::kNonempty: return Smoothness::kSingular;
    case ZeroLocus::kUndetermined: return Smoothness::kUndetermined;
  }
  return Smoothness::kUndetermined;
}

}  // namespace

Smoothness is_smooth_hypersurface(const HomogeneousForm& f, const PrimeField& field) {
  if (f.degree < 1) throw PreconditionError("is_smooth_hypersurface: degree must be positive");
  if (f.degree % static_cast<std::int64_t>(field.p()) == 0) {
    throw PreconditionError("characteristic divides degree; pick larger p");
  }
  const auto grad = partials(f, field);
  return smoothness_from(is_basepoint_free(grad, field));
}

Smoothness is_smooth_ci_curve(const HomogeneousForm& f1, const HomogeneousForm& f3,
                              const PrimeField& field, std::optional<int> degree_cap) {
  if (f1.degree < 1 || f3.degree < 1) throw PreconditionError("is_smooth_ci_curve: degrees must be positive");
  const auto g1 = partials(f1, field);
  const auto g3 = partials(f3, field);

  std::vector<HomogeneousForm> gens{f1, f3};
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = i + 1; j < kNumVars; ++j) {
      gens.push_back(subtract(multiply(g1[i], g3[j], field), multiply(g1[j], g3[i], field), field));
    }
  }
  if (!degree_cap) {
    const int d1 = f1.degree, d3 = f3.degree;
    const int minor_deg = d1 + d3 - 2;
    const int heuristic = d1 + d3 + 2 * minor_deg - 3;
    const int certified = kNumVars * std::max({d1, d3, minor_deg}) - (kNumVars - 1);
    degree_cap = std::max(heuristic, certified);
  }
  return smoothness_from(is_basepoint_free(gens, field, degree_cap));
}

NullCorrelationMonad random_monad(const EinParams& params, const PrimeField& field, std::uint64_t seed,
                                  const MonadOptions& options) {
  if (field.p() <= 4u * static_cast<std::uint32_t>(params.c())) {
    throw PreconditionError("prime too small: need p > 4c = " + std::to_string(4 * params.c()));
  }
  if (options.max_retries < 1) throw PreconditionError("max_retries must be positive");

  const auto degs = params.form_degrees();
  std::string failing = "none";
  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    const std::uint64_t attempt_seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    std::array<HomogeneousForm, 4> forms;
    for (std::size_t i = 0; i < 4; ++i) forms[i] = random_form(degs[i], derive_seed(attempt_seed, i), field);

    if (!is_basepoint_free(forms, field).empty()) {
      failing = "base locus of f1..f4 is nonempty";
      continue;
    }
    if (options.require_smoothness) {
      if (is_smooth_hypersurface(forms[2], field) != Smoothness::kSmooth) {
        failing = "surface {f3 = 0} is not smooth";
        continue;
      }
      if (is_smooth_ci_curve(forms[0], forms[2], field) != Smoothness::kSmooth) {
        failing = "curve {f1 = f3 = 0} is not smooth";
        continue;
      }
    }
    return NullCorrelationMonad{params, field.p(), seed, attempt + 1, std::move(forms)};
  }
  throw ConstructionError(failing, options.max_retries);
}

nlohmann::json to_json(const EinParams& p) {
  return nlohmann::json{{"e", p.e()}, {"a", p.a()}, {"b", p.b()}, {"c", p.c()}, {"n", p.n()}};
}

nlohmann::json to_json(const NullCorrelationMonad& monad) {
  nlohmann::json j{{"e", monad.params.e()}, {"a", monad.params.a()}, {"b", monad.params.b()},
                   {"c", monad.params.c()}, {"p", monad.prime},     {"seed", monad.seed},
                   {"attempts", monad.attempts}};
  for (std::size_t i = 0; i < 4; ++i) j["f" + std::to_string(i + 1)] = monad.f[i].coeffs;
  return j;
}

NullCorrelationMonad monad_from_json(const nlohmann::json& j) {
  const EinParams params =
      EinParams::make(j.at("e").get<int>(), j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>());
  const PrimeField field(j.at("p").get<std::uint32_t>());
  const auto degs = params.form_degrees();
  std::array<HomogeneousForm, 4> forms;
  for (std::size_t i = 0; i < 4; ++i) {
    forms[i] = form_from_json(nlohmann::json{{"degree", degs[i]}, {"coeffs", j.at("f" + std::to_string(i + 1))}},
                              field);
  }
  NullCorrelationMonad monad = make_monad(params, std::move(forms), field);
  monad.seed = j.value("seed", std::uint64_t{0});
  monad.attempts = j.value("attempts", 1);
  return monad;
}

}  // namespace ein
