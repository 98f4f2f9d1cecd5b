#include "cli/verify.hpp"

#include <future>
#include <sstream>

#include "ein/cohomology.hpp"
#include "ein/errors.hpp"
#include "ein/seed.hpp"

namespace ein::cli {

TrialResult verify_trial(const EinParams& params, const PrimeField& field, std::uint64_t seed, int index,
                         const MonadOptions& options) {
  TrialResult t;
  t.index = index;
  t.seed = seed;

  NullCorrelationMonad monad{params, field.p(), seed, 0, {}};
  try {
    monad = random_monad(params, field, seed, options);
  } catch (const ConstructionError& err) {
    t.construction_error = err.what();
    t.attempts = options.max_retries;
    return t;
  }
  t.constructed = true;
  t.attempts = monad.attempts;
  t.monad = to_json(monad);
  t.composition_ok = composition_vanishes(monad, field);

  const int c = params.c();
  try {
    t.h1_minus_c_ok = h_all(monad, -c, field).h1 == 1;
    t.h1_closed_form_ok = true;
    for (int m = -c; m <= -1; ++m) {
      const std::int64_t computed = h_all(monad, m, field).h1;
      const std::int64_t expected = h1_closed_form(params, m);
      if (computed != expected) {
        t.h1_closed_form_ok = false;
        t.h1_mismatches.push_back({m, computed, expected});
      }
    }
    t.stability_ok = stability_check(monad, -3, field);
    t.chi_ok = true;
    for (int m = -c - 4; m <= c; ++m) {
      const CohomologyRecord r = h_all(monad, m, field);  // throws on chi mismatch
      if (r.chi != monad_euler_char(params, m)) t.chi_ok = false;
    }
  } catch (const VerificationError&) {
    t.chi_ok = false;
  }
  return t;
}

VerifyReport verify_monad(const EinParams& params, const PrimeField& field, std::uint64_t master_seed, int trials,
                          const MonadOptions& options) {
  std::vector<std::future<TrialResult>> jobs;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
    jobs.push_back(std::async(std::launch::async, [&params, &field, &options, seed, i] {
      return verify_trial(params, field, seed, i, options);
    }));
  }
  VerifyReport report{params, field.p(), master_seed, {}};
  for (auto& job : jobs) report.trials.push_back(job.get());
  return report;
}

int VerifyReport::passed() const noexcept {
  int count = 0;
  for (const auto& t : trials) count += t.pass() ? 1 : 0;
  return count;
}

bool VerifyReport::majority_pass() const noexcept {
  return 2 * passed() > static_cast<int>(trials.size());
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : report.trials) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& mm : t.h1_mismatches) {
      mismatches.push_back({{"m", mm.m}, {"computed", mm.computed}, {"expected", mm.expected}});
    }
    nlohmann::json jt{{"index", t.index},
                      {"seed", t.seed},
                      {"constructed", t.constructed},
                      {"attempts", t.attempts},
                      {"checks",
                       {{"composition", t.composition_ok},
                        {"h1_minus_c", t.h1_minus_c_ok},
                        {"h1_closed_form", t.h1_closed_form_ok},
                        {"stability", t.stability_ok},
                        {"chi", t.chi_ok}}},
                      {"h1_mismatches", std::move(mismatches)},
                      {"pass", t.pass()}};
    if (!t.construction_error.empty()) jt["error"] = t.construction_error;
    if (t.monad) jt["monad"] = *t.monad;
    trials.push_back(std::move(jt));
  }
  nlohmann::json j{{"params", to_json(report.params)},
                   {"prime", report.prime},
                   {"seed", report.master_seed},
                   {"trials", std::move(trials)},
                   {"passed", report.passed()},
                   {"verdict", report.majority_pass() ? "PASS" : "FAIL"}};
  if (h1_minus_b_needs_flag(report.params)) {
    j["note"] = "a = b > 0: h1(E(-b)) follows the general formula, which keeps the h0(O(a-b)) = 1 term";
  }
  return j;
}

std::string to_markdown(const VerifyReport& report) {
  const auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  const EinParams& p = report.params;
  std::ostringstream os;
  os << "### verify-monad (e,a,b,c) = (" << p.e() << "," << p.a() << "," << p.b() << "," << p.c()
     << "), n = " << p.n() << ", p = " << report.prime << ", seed = " << report.master_seed << "\n\n"
     << "| trial | seed | attempts | mu.lambda=0 | h1(-c)=1 | h1 closed form | h0(m<=0)=0 | chi | result |\n"
     << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& t : report.trials) {
    os << "| " << t.index << " | " << t.seed << " | " << t.attempts << " | ";
    if (!t.constructed) {
      os << "- | - | - | - | - | FAIL (" << t.construction_error << ") |\n";
      continue;
    }
    os << mark(t.composition_ok) << " | " << mark(t.h1_minus_c_ok) << " | " << mark(t.h1_closed_form_ok) << " | "
       << mark(t.stability_ok) << " | " << mark(t.chi_ok) << " | " << (t.pass() ? "PASS" : "FAIL") << " |\n";
  }
  os << "\nverdict: " << (report.majority_pass() ? "PASS" : "FAIL") << " (" << report.passed() << "/"
     << report.trials.size() << " trials)\n";
  if (h1_minus_b_needs_flag(p)) {
    os << "note: a = b > 0, h1(E(-b)) follows the general formula (keeps the h0(O(a-b)) = 1 term)\n";
  }
  return os.str();
}

}  // namespace ein::cli
