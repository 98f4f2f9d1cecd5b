#include "ein/cohomology.hpp"

#include <array>
#include <future>
#include <string>

#include <nlohmann/json.hpp>

#include "ein/errors.hpp"

namespace ein {
namespace {

std::int64_t as_int(std::size_t v) noexcept { return static_cast<std::int64_t>(v); }

struct MuStarDims {
  std::int64_t kernel;
  std::int64_t cokernel;
};

MuStarDims mu_star_dims(const NullCorrelationMonad& monad, int m, const PrimeField& field) {
  FpMatrix mu = mu_star_matrix(monad, m, field);
  const std::size_t r = mu.empty() ? 0 : rank_in_place(mu, field);
  return {as_int(mu.cols() - r), as_int(mu.rows() - r)};
}

}  // namespace

FpMatrix mu_star_matrix(const NullCorrelationMonad& monad, int m, const PrimeField& field) {
  const auto twists = monad.params.summand_twists();
  std::array<FpMatrix, 4> blocks;
  for (std::size_t i = 0; i < 4; ++i) blocks[i] = mult_map(monad.f[i], twists[i] + m, field);
  return hconcat(blocks, dim_forms(monad.params.c() + m));
}

std::int64_t monad_euler_char(const EinParams& p, int m) noexcept {
  std::int64_t chi = 0;
  for (int t : p.summand_twists()) chi += euler_char_line_bundle(t + m);
  return chi - euler_char_line_bundle(p.c() + m) - euler_char_line_bundle(p.e() - p.c() + m);
}

CohomologyRecord h_all(const NullCorrelationMonad& monad, int m, const PrimeField& field) {
  const EinParams& p = monad.params;
  const int dual = -p.e() - 4 - m;

  const MuStarDims here = mu_star_dims(monad, m, field);
  const MuStarDims there = mu_star_dims(monad, dual, field);

  CohomologyRecord r;
  r.m = m;
  r.h0 = here.kernel - as_int(dim_forms(p.e() - p.c() + m));
  r.h1 = here.cokernel;
  r.h3 = there.kernel - as_int(dim_forms(p.e() - p.c() + dual));
  r.h2 = there.cokernel;
  r.chi = monad_euler_char(p, m);

  if (r.h0 < 0 || r.h3 < 0 || r.chi != r.h0 - r.h1 + r.h2 - r.h3) {
    throw VerificationError("display exactness violated at m = " + std::to_string(m));
  }
  return r;
}

std::vector<CohomologyRecord> cohomology_table(const NullCorrelationMonad& monad, int m_lo, int m_hi,
                                               const PrimeField& field) {
  std::vector<std::future<CohomologyRecord>> jobs;
  for (int m = m_lo; m <= m_hi; ++m) {
    jobs.push_back(std::async(std::launch::async, [&monad, &field, m] { return h_all(monad, m, field); }));
  }
  std::vector<CohomologyRecord> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

bool stability_check(const NullCorrelationMonad& monad, int m_min, const PrimeField& field) {
  if (m_min > 0) throw PreconditionError("stability_check: empty twist range (m_min > 0)");
  for (int m = m_min; m <= 0; ++m) {
    const MuStarDims dims = mu_star_dims(monad, m, field);
    if (dims.kernel - as_int(dim_forms(monad.params.e() - monad.params.c() + m)) != 0) return false;
  }
  return true;
}

std::int64_t h1_closed_form(const EinParams& p, int m) {
  if (m > -1) throw PreconditionError("h1_closed_form: requires m <= -1");
  const std::int64_t v =
      as_int(dim_forms(p.c() + m)) - as_int(dim_forms(p.a() + m)) - as_int(dim_forms(p.b() + m));
  if (v < 0) throw VerificationError("h1_closed_form: negative value for admissible params");
  return v;
}

bool h1_minus_b_needs_flag(const EinParams& p) noexcept { return p.b() > 0 && p.a() == p.b(); }

std::int64_t h0_ideal_curve(const HomogeneousForm& f1, const HomogeneousForm& f3, int d, const PrimeField& field) {
  const int d1 = f1.degree;
  const int d3 = f3.degree;
  const std::int64_t closed =
      as_int(dim_forms(d - d1)) + as_int(dim_forms(d - d3)) - as_int(dim_forms(d - d1 - d3));

  const std::array<FpMatrix, 2> blocks{mult_map(f1, d - d1, field), mult_map(f3, d - d3, field)};
  const FpMatrix m = hconcat(blocks, dim_forms(d));
  const std::int64_t image = as_int(rank(m, field));
  if (image != closed) throw VerificationError("non-generic pair (common factor?)");
  return image;
}

nlohmann::json to_json(const CohomologyRecord& r) {
  return nlohmann::json{{"m", r.m}, {"h0", r.h0}, {"h1", r.h1}, {"h2", r.h2}, {"h3", r.h3}, {"chi", r.chi}};
}

}  // namespace ein
