#include "cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/verify.hpp"
#include "ein/cohomology.hpp"
#include "ein/errors.hpp"
#include "ein/moduli_tables.hpp"

namespace ein::cli {
namespace {

Report usage_error(const std::string& message) { return {kExitUsage, "error: " + message + "\n"}; }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Returns an error message when a required option is absent.
std::optional<std::string> require(std::initializer_list<std::pair<const char*, bool>> present) {
  for (const auto& [name, ok] : present) {
    if (!ok) return std::string("missing required option --") + name;
  }
  return std::nullopt;
}

}  // namespace

Report cmd_enumerate(const RunConfig& cfg) {
  if (!cfg.e) return usage_error("missing required option --e");
  if (*cfg.e != 0 && *cfg.e != -1) return usage_error("--e must be 0 or -1");
  if (!cfg.n && !cfg.n_max) return usage_error("enumerate needs --n or --n-max");

  std::vector<TableRow> table;
  if (cfg.n) {
    if (*cfg.n < 1) return usage_error("--n must be positive");
    if (*cfg.e == -1 && *cfg.n % 2 != 0) return usage_error("--n must be even for e = -1");
    table.push_back({*cfg.n, enumerate(*cfg.e, *cfg.n)});
  } else {
    if (*cfg.n_max < 0) return usage_error("--n-max must be nonnegative");
    table = section_table(*cfg.e, *cfg.n_max);
  }
  return {kExitOk, cfg.format == Format::kJson ? dump(to_json(table, *cfg.e)) : to_markdown(table, *cfg.e)};
}

Report cmd_classify(const RunConfig& cfg) {
  if (auto missing = require({{"e", cfg.e.has_value()}, {"a", cfg.a.has_value()},
                              {"b", cfg.b.has_value()}, {"c", cfg.c.has_value()}})) {
    return usage_error(*missing);
  }
  try {
    const ComponentRecord r = make_record(EinParams::make(*cfg.e, *cfg.a, *cfg.b, *cfg.c));
    return {kExitOk, cfg.format == Format::kJson ? dump(to_json(r)) : to_markdown(r)};
  } catch (const InvalidParams& err) {
    return usage_error(err.what());
  }
}

namespace {

// Parameters and field shared by the monad commands.
struct MonadSetup {
  std::optional<EinParams> params;
  std::optional<PrimeField> field;
  std::optional<Report> error;
};

MonadSetup monad_setup(const RunConfig& cfg) {
  MonadSetup s;
  if (auto missing = require({{"e", cfg.e.has_value()}, {"a", cfg.a.has_value()},
                              {"b", cfg.b.has_value()}, {"c", cfg.c.has_value()}})) {
    s.error = usage_error(*missing);
    return s;
  }
  try {
    s.params = EinParams::make(*cfg.e, *cfg.a, *cfg.b, *cfg.c);
    s.field = PrimeField(cfg.prime);
  } catch (const PreconditionError& err) {
    s.error = usage_error(err.what());
    return s;
  }
  if (cfg.prime <= 4u * static_cast<std::uint32_t>(s.params->c())) {
    s.error = usage_error("prime too small: need p > 4c = " + std::to_string(4 * s.params->c()));
  }
  return s;
}

}  // namespace

Report cmd_verify_monad(const RunConfig& cfg) {
  MonadSetup s = monad_setup(cfg);
  if (s.error) return *s.error;
  if (cfg.trials < 1) return usage_error("--trials must be positive");

  MonadOptions options;
  options.max_retries = cfg.max_retries;
  const VerifyReport report = verify_monad(*s.params, *s.field, cfg.seed, cfg.trials, options);
  return {report.majority_pass() ? kExitOk : kExitVerificationFailed,
          cfg.format == Format::kJson ? dump(to_json(report)) : to_markdown(report)};
}

Report cmd_cohomology_table(const RunConfig& cfg) {
  MonadSetup s = monad_setup(cfg);
  if (s.error) return *s.error;
  const int c = s.params->c();
  const int m_lo = cfg.m_min.value_or(-c - 4);
  const int m_hi = cfg.m_max.value_or(c);

  MonadOptions options;
  options.max_retries = cfg.max_retries;
  NullCorrelationMonad monad{*s.params, cfg.prime, cfg.seed, 0, {}};
  try {
    monad = random_monad(*s.params, *s.field, cfg.seed, options);
  } catch (const ConstructionError& err) {
    return {kExitVerificationFailed, std::string("error: ") + err.what() + "\n"};
  }
  std::vector<CohomologyRecord> rows;
  try {
    rows = cohomology_table(monad, m_lo, m_hi, *s.field);
  } catch (const VerificationError& err) {
    return {kExitVerificationFailed, std::string("error: ") + err.what() + "\n"};
  }

  if (cfg.format == Format::kJson) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : rows) records.push_back(to_json(r));
    return {kExitOk, dump({{"monad", to_json(monad)}, {"records", std::move(records)}})};
  }
  const EinParams& p = *s.params;
  std::ostringstream os;
  os << "### h^i(E(m)) for (e,a,b,c) = (" << p.e() << "," << p.a() << "," << p.b() << "," << p.c()
     << "), p = " << cfg.prime << ", seed = " << cfg.seed << "\n\n"
     << "|  m | h0 | h1 | h2 | h3 | chi |\n|---:|---:|---:|---:|---:|----:|\n";
  for (const auto& r : rows) {
    os << "| " << r.m << " | " << r.h0 << " | " << r.h1 << " | " << r.h2 << " | " << r.h3 << " | " << r.chi << " |\n";
  }
  return {kExitOk, os.str()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("EIN_PRIME")) {
    try {
      cfg.prime = static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: EIN_PRIME is not a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Ein components of moduli of rank-2 bundles on P^3", "ein"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--output", output, "write the report to this path instead of stdout");
  };
  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--e", cfg.e, "first Chern class, 0 or -1");
    sub->add_option("--a", cfg.a);
    sub->add_option("--b", cfg.b);
    sub->add_option("--c", cfg.c);
  };
  const auto add_monad = [&](CLI::App* sub) {
    sub->add_option("--prime", cfg.prime, "prime field characteristic (default 32003 or $EIN_PRIME)");
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--max-retries", cfg.max_retries, "sampling attempts per monad");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list Ein components of M(e, n)");
  enumerate_cmd->add_option("--e", cfg.e, "first Chern class, 0 or -1");
  enumerate_cmd->add_option("--n", cfg.n, "a single second Chern class");
  enumerate_cmd->add_option("--n-max", cfg.n_max, "all n in 1..n-max");
  add_common(enumerate_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "invariants and rationality of one component");
  add_params(classify_cmd);
  add_common(classify_cmd);

  auto* verify_cmd = app.add_subcommand("verify-monad", "cohomology checks on random monads");
  add_params(verify_cmd);
  add_monad(verify_cmd);
  verify_cmd->add_option("--trials", cfg.trials, "independent seeded trials");
  add_common(verify_cmd);

  auto* table_cmd = app.add_subcommand("cohomology-table", "h^i(E(m)) for one seeded monad");
  add_params(table_cmd);
  add_monad(table_cmd);
  table_cmd->add_option("--m-min", cfg.m_min, "first twist (default -c-4)");
  table_cmd->add_option("--m-max", cfg.m_max, "last twist (default c)");
  add_common(table_cmd);

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  cfg.format = format == "markdown" ? Format::kMarkdown : Format::kJson;
  if (!output.empty()) cfg.output_path = output;

  Report report;
  if (enumerate_cmd->parsed()) {
    report = cmd_enumerate(cfg);
  } else if (classify_cmd->parsed()) {
    report = cmd_classify(cfg);
  } else if (verify_cmd->parsed()) {
    report = cmd_verify_monad(cfg);
  } else {
    report = cmd_cohomology_table(cfg);
  }

  if (report.exit_code == kExitUsage) {
    err << report.text;
    return report.exit_code;
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) {
      err << "error: cannot open " << *cfg.output_path << "\n";
      return kExitUsage;
    }
    file << report.text;
  } else {
    out << report.text;
  }
  return report.exit_code;
}

}  // namespace ein::cli
