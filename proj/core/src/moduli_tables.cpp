#include "ein/moduli_tables.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "ein/errors.hpp"
#include "ein/graded_poly.hpp"

namespace ein {
namespace {

// C(x+3, 3) for a twist x appearing in a dimension formula. Every such twist
// is nonnegative for admissible parameters.
std::int64_t h0_line(std::int64_t x) {
  if (x < 0) throw VerificationError("binomial C(" + std::to_string(x + 3) + ", 3) with argument below 3");
  return (x + 1) * (x + 2) * (x + 3) / 6;
}

}  // namespace

const char* to_string(Rationality r) noexcept {
  return r == Rationality::kRational ? "rational" : "stably_rational_at_least";
}

std::int64_t t_value(int e, int a, int b) noexcept {
  if (e == 0) {
    if (a == 0 && b == 0) return 4;
    if ((a == 0 && b > 0) || (a == b && a > 0)) return 1;
    return 0;
  }
  return a == b ? 1 : 0;
}

std::int64_t delta_value(const EinParams& p) {
  const std::int64_t bound = 2 * p.a() + p.b() - p.e();
  if (p.c() > bound) return 0;
  return h0_line(bound - p.c());
}

std::int64_t m_value(const EinParams& p) noexcept {
  if (p.e() != 0 || p.a() != 0) return 0;
  return p.b() > 0 ? 1 : 2;
}

std::int64_t tau_value(const EinParams& p) {
  const std::int64_t tau = delta_value(p) + t_value(p.e(), p.a(), p.b()) - m_value(p);
  if (tau < 0) throw VerificationError("tau < 0");
  return tau;
}

std::int64_t dim_nbar(const EinParams& p) {
  const std::int64_t e = p.e(), a = p.a(), b = p.b(), c = p.c();
  return h0_line(c + a - e) + h0_line(c + b - e) + h0_line(c - a) + h0_line(c - b) - h0_line(a + b - e) -
         h0_line(b - a) - h0_line(2 * a - e) - h0_line(2 * b - e) - 3 - t_value(p.e(), p.a(), p.b());
}

AuxDims aux_dims(const EinParams& p) {
  const std::int64_t e = p.e(), a = p.a(), b = p.b(), c = p.c();
  const std::int64_t delta = delta_value(p);
  AuxDims d{};
  d.dim_P = h0_line(c - b) - 1;
  d.dim_r_fibre = h0_line(c - a) - h0_line(b - a) - 1;
  d.dim_R = h0_line(c - b) + h0_line(c - a) - h0_line(b - a) - 2;
  d.dim_ext1 = h0_line(c + a - e) - h0_line(a + b - e) - h0_line(2 * a - e) + delta;
  d.dim_T = h0_line(c - b) + h0_line(c - a) - h0_line(b - a) + h0_line(c + a - e) - h0_line(a + b - e) -
            h0_line(2 * a - e) + delta - 3;
  d.rk_A = h0_line(b + c - e) - h0_line(2 * b - e) + 1;
  d.dim_U = h0_line(c - b) + h0_line(c - a) - h0_line(b - a) + h0_line(c + a - e) - h0_line(a + b - e) -
            h0_line(2 * a - e) + h0_line(b + c - e) - h0_line(2 * b - e) + delta - 3;
  return d;
}

ReflexiveChern reflexive_chern_classes(const EinParams& p) noexcept {
  const std::int64_t e = p.e(), a = p.a(), b = p.b(), c = p.c();
  return {e + b - c, c * c - a * a - b * c - e * (c - a - b), (c - a) * (c - b) * (c + a - e)};
}

Rationality classify(const EinParams& p) noexcept {
  if (p.e() == 0 && p.a() == 0) {
    return p.b() == 0 ? Rationality::kRational : Rationality::kStablyRationalAtLeast;
  }
  return p.c() > 2 * p.a() + p.b() - p.e() ? Rationality::kRational : Rationality::kStablyRationalAtLeast;
}

std::optional<LiteratureNote> literature_note(const EinParams& p) {
  const auto key = std::array{p.e(), p.a(), p.b(), p.c()};
  if (key == std::array{0, 0, 1, 2}) {
    return LiteratureNote{Rationality::kRational, "both components of M(0,3) are rational (Ellingsrud-Stromme)"};
  }
  if (key == std::array{-1, 0, 0, 1}) {
    return LiteratureNote{Rationality::kRational, "M(-1,2) is rational (Hartshorne-Sols)"};
  }
  if (key == std::array{-1, 0, 1, 2}) {
    return LiteratureNote{Rationality::kRational, "28-dimensional component of M(-1,4), maximal spectrum, is rational"};
  }
  return std::nullopt;
}

namespace {

std::string classification_basis(const EinParams& p) {
  if (p.e() == 0 && p.a() == 0) {
    return p.b() == 0 ? "e=a=b=0: rational by Vedernikov's V4 family; the fibration construction gives m=2"
                      : "e=a=0, b>0: fibration construction, P^1-bundle over a rational base (m=1)";
  }
  if (classify(p) == Rationality::kRational) {
    if (p.a() == p.b()) {
      return p.e() == 0 ? "rationality construction (tau=0, m=0); a=b case covers Vedernikov's V2 range"
                        : "rationality construction (tau=0, m=0); a=b, e=-1 case checked against the reference tables";
    }
    return "rationality construction (tau=0, m=0)";
  }
  return "c <= 2a+b-e: stable rationality construction (tau > 0)";
}

}  // namespace

ComponentRecord make_record(const EinParams& p) {
  ComponentRecord r{p,
                    p.n(),
                    dim_nbar(p),
                    classify(p),
                    t_value(p.e(), p.a(), p.b()),
                    delta_value(p),
                    m_value(p),
                    tau_value(p),
                    aux_dims(p),
                    reflexive_chern_classes(p),
                    classification_basis(p),
                    literature_note(p)};
  return r;
}

std::vector<ComponentRecord> enumerate(int e, std::int64_t n) {
  if (e != 0 && e != -1) throw PreconditionError("e must be 0 or -1");
  if (n < 1) throw PreconditionError("n must be positive");
  if (e == -1 && n % 2 != 0) throw PreconditionError("n must be even for e = -1");

  // For fixed (a,b), n(c) is strictly increasing on c > a+b, with minimum
  // 2ab + 2a + 2b + 1 - e at c = a+b+1; that bounds all three loops.
  std::vector<ComponentRecord> out;
  const std::int64_t ee = e;
  for (std::int64_t a = 0; 2 * a * a + 4 * a + 1 - ee <= n; ++a) {
    for (std::int64_t b = a; 2 * a * b + 2 * a + 2 * b + 1 - ee <= n; ++b) {
      for (std::int64_t c = a + b + 1;; ++c) {
        const std::int64_t value = c * c - a * a - b * b - ee * (c - a - b);
        if (value > n) break;
        if (value == n) {
          out.push_back(make_record(EinParams::make(e, static_cast<int>(a), static_cast<int>(b), static_cast<int>(c))));
        }
      }
    }
  }
  return out;
}

std::vector<TableRow> section_table(int e, std::int64_t n_max) {
  std::vector<TableRow> rows;
  const std::int64_t step = e == -1 ? 2 : 1;
  for (std::int64_t n = step; n <= n_max; n += step) rows.push_back({n, enumerate(e, n)});
  return rows;
}

nlohmann::json to_json(const ComponentRecord& r) {
  nlohmann::json inv{{"t", r.t},
                     {"delta", r.delta},
                     {"m", r.m},
                     {"tau", r.tau},
                     {"dim_P", r.aux.dim_P},
                     {"dim_r_fibre", r.aux.dim_r_fibre},
                     {"dim_R", r.aux.dim_R},
                     {"dim_ext1", r.aux.dim_ext1},
                     {"dim_T", r.aux.dim_T},
                     {"rk_A", r.aux.rk_A},
                     {"dim_U", r.aux.dim_U},
                     {"c1_F", r.chern_F.c1},
                     {"c2_F", r.chern_F.c2},
                     {"c3_F", r.chern_F.c3}};
  nlohmann::json j{{"e", r.params.e()}, {"n", r.n},   {"a", r.params.a()},
                   {"b", r.params.b()}, {"c", r.params.c()}, {"dim", r.dim},
                   {"status", to_string(r.status)}, {"invariants", std::move(inv)},
                   {"basis", r.basis}};
  if (r.literature) {
    j["literature"] = {{"status", to_string(r.literature->status)}, {"source", r.literature->source}};
  }
  return j;
}

nlohmann::json to_json(const std::vector<TableRow>& table, int e) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& r : row.components) comps.push_back(to_json(r));
    rows.push_back({{"n", row.n}, {"components", std::move(comps)}});
  }
  return {{"e", e}, {"rows", std::move(rows)}};
}

namespace {

std::string component_name(const EinParams& p) {
  std::ostringstream os;
  os << "N(" << p.e() << "," << p.a() << "," << p.b() << "," << p.c() << ")";
  return os.str();
}

const char* status_label(Rationality r) noexcept {
  return r == Rationality::kRational ? "rational" : "stably rational";
}

void markdown_row(std::ostringstream& os, const ComponentRecord& r) {
  os << "| " << r.n << " | " << component_name(r.params) << " | " << r.dim << " | " << status_label(r.status)
     << " | " << r.tau << " | ";
  if (r.literature) os << status_label(r.literature->status) << ": " << r.literature->source;
  os << " |\n";
}

constexpr const char* kHeader =
    "| n | component | dim | status | tau | note |\n"
    "|---|-----------|-----|--------|-----|------|\n";

}  // namespace

std::string to_markdown(const std::vector<TableRow>& table, int e) {
  std::ostringstream os;
  os << "### Ein components of M(" << e << ", n)\n\n" << kHeader;
  for (const auto& row : table) {
    if (row.components.empty()) {
      os << "| " << row.n << " | no Ein components | | | | |\n";
      continue;
    }
    for (const auto& r : row.components) markdown_row(os, r);
  }
  return os.str();
}

std::string to_markdown(const ComponentRecord& r) {
  std::ostringstream os;
  os << kHeader;
  markdown_row(os, r);
  os << "\n| invariant | value |\n|---|---|\n"
     << "| t | " << r.t << " |\n| delta | " << r.delta << " |\n| m | " << r.m << " |\n| tau | " << r.tau << " |\n"
     << "| dim P | " << r.aux.dim_P << " |\n| dim r^-1(S) | " << r.aux.dim_r_fibre << " |\n"
     << "| dim R | " << r.aux.dim_R << " |\n| dim Ext^1 | " << r.aux.dim_ext1 << " |\n"
     << "| dim T | " << r.aux.dim_T << " |\n| rk A | " << r.aux.rk_A << " |\n| dim U | " << r.aux.dim_U << " |\n"
     << "| c1(F) | " << r.chern_F.c1 << " |\n| c2(F) | " << r.chern_F.c2 << " |\n| c3(F) | " << r.chern_F.c3
     << " |\n\nbasis: " << r.basis << "\n";
  return os.str();
}

}  // namespace ein
