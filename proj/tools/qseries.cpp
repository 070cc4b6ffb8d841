// qseries: expand q-series expressions, run the identity registry and scan
// bipartition congruences.
//
// Exit codes:
//   0  success
//   1  a verification item failed
//   2  parse or evaluation error
//   3  unknown registry filter
//   4  scan exceeds the order budget
//   5  usage error

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/qexpr.hpp"
#include "qseries/qfunctions.hpp"
#include "qseries/registry.hpp"
#include "qseries/report.hpp"
#include "qseries/series.hpp"

namespace {

namespace qx = qseries::qexpr;
namespace qv = qseries::verify;

enum Exit {
  kOk = 0,
  kFailed = 1,
  kEvalError = 2,
  kUnknownFilter = 3,
  kBudget = 4,
  kUsage = 5,
};

constexpr std::size_t kBuiltinOrder = 500;
constexpr std::size_t kDefaultMaxOrder = 500000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::size_t> env_default_order() {
  const char* raw = std::getenv("QSERIES_DEFAULT_ORDER");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || v == 0) {
    throw UsageError("QSERIES_DEFAULT_ORDER must be a positive integer, got '" +
                     std::string(raw) + "'");
  }
  return static_cast<std::size_t>(v);
}

qseries::CoefficientRing ring_for(std::optional<std::uint64_t> mod) {
  if (!mod) return qseries::CoefficientRing::integers();
  try {
    return qseries::CoefficientRing::modulo(*mod);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void print_parse_error(const std::string& text, const qx::ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  "
            << std::string(e.offset(), ' ') << "^\n";
}

int cmd_expand(const std::string& text, std::optional<std::size_t> order,
               std::optional<std::uint64_t> mod, const std::string& format) {
  const std::size_t n =
      order ? *order : env_default_order().value_or(kBuiltinOrder);
  if (n == 0) throw UsageError("--order must be positive");
  const auto ring = ring_for(mod);

  qx::Expr expr;
  try {
    expr = qx::parse(text);
  } catch (const qx::ParseError& e) {
    print_parse_error(text, e);
    return kEvalError;
  }
  std::optional<qseries::Series> s;
  try {
    s = qx::evaluate(expr, {n, ring});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEvalError;
  }
  if (s->order() < n) {
    std::cerr << "note: result known only to order " << s->order() << "\n";
  }
  const std::size_t shown = std::min(n, s->order());

  if (format == "json") {
    nlohmann::json j;
    j["expression"] = qx::print(expr);
    j["ring"] = ring.name();
    j["order"] = shown;
    auto& coeffs = j["coefficients"] = nlohmann::json::array();
    for (std::size_t i = 0; i < shown; ++i) {
      coeffs.push_back(s->coeff(i).get_str());
    }
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n,c_n\n";
    for (std::size_t i = 0; i < shown; ++i) {
      std::cout << i << "," << s->coeff(i).get_str() << "\n";
    }
  } else {
    for (std::size_t i = 0; i < shown; ++i) {
      if (i) std::cout << ' ';
      std::cout << s->coeff(i).get_str();
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& filter, std::optional<std::size_t> order,
               std::optional<std::size_t> count, const std::string& format,
               unsigned threads) {
  const auto selection = qv::select(filter);
  if (!selection.unknown.empty()) {
    for (const auto& u : selection.unknown) {
      std::cerr << "error: unknown registry id or group '" << u << "'\n";
    }
    return kUnknownFilter;
  }
  qv::RunOptions options;
  options.order = order;
  options.default_order = env_default_order();
  options.count = count;
  options.threads = threads;

  if (format == "csv") {
    std::cout << qv::csv_header() << "\n";
  } else if (format == "table") {
    std::cout << qv::table_header() << "\n";
  }
  const auto result =
      qv::run_registry(filter, options, [&](const qv::VerificationReport& r) {
        if (format == "json") {
          std::cout << qv::to_json_line(r) << "\n";
        } else if (format == "csv") {
          std::cout << qv::to_csv_row(r) << "\n";
        } else {
          std::cout << qv::to_table_row(r) << "\n";
        }
        std::cout.flush();
      });
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  if (format == "table") {
    std::size_t passed = 0;
    for (const auto& r : result.reports) passed += r.passed() ? 1 : 0;
    std::cout << passed << "/" << result.reports.size() << " passed\n";
  }
  return result.all_passed() ? kOk : kFailed;
}

int cmd_scan(std::size_t s, std::size_t t, std::size_t p, std::size_t r,
             std::uint64_t m, std::size_t count, std::size_t max_order,
             const std::string& format) {
  if (s == 0 || t == 0) throw UsageError("s and t must be positive");
  if (p == 0 || r >= p) throw UsageError("need 0 <= r < p");
  if (count == 0) throw UsageError("count must be positive");
  const auto ring = ring_for(m);
  const std::size_t required = p * (count - 1) + r + 1;
  if (required > max_order) {
    std::cerr << "error: scan needs series order " << required
              << ", above the budget of " << max_order
              << " (raise it with --max-order)\n";
    return kBudget;
  }
  const auto series = qseries::bipartition_series(s, t, required, ring);

  bool all_zero = true;
  nlohmann::json rows = nlohmann::json::array();
  if (format == "csv") std::cout << "n,index,residue\n";
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t idx = p * n + r;
    const std::string v = series.coeff(idx).get_str();
    all_zero = all_zero && series.coeff_is_zero(idx);
    if (format == "json") {
      rows.push_back({{"n", n}, {"index", idx}, {"residue", v}});
    } else if (format == "csv") {
      std::cout << n << "," << idx << "," << v << "\n";
    } else {
      std::cout << "B_{" << s << "," << t << "}(" << idx << ") = " << v
                << " (mod " << m << ")\n";
    }
  }
  if (format == "json") {
    nlohmann::json j{{"s", s},         {"t", t},         {"p", p},
                     {"r", r},         {"modulus", m},   {"count", count},
                     {"rows", rows},   {"all_zero", all_zero}};
    std::cout << j.dump() << "\n";
  } else if (format != "csv") {
    std::cout << "all zero: " << (all_zero ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_list() {
  for (const auto& item : qv::registry()) {
    std::cout << item.id << "\t" << item.group << "\t"
              << qv::to_string(item.method) << "\t" << item.description
              << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated q-series toolkit for bipartition congruences"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "qseries 1.0.0");

  std::string format = "table";
  const std::vector<std::string> formats{"table", "json", "csv"};

  auto* expand = app.add_subcommand("expand", "Print c_0 .. c_{N-1} of an expression");
  std::string expr_text;
  std::optional<std::size_t> order;
  std::optional<std::uint64_t> mod;
  expand->add_option("expr", expr_text, "Expression, e.g. \"f2*f15/f1^2\"")->required();
  expand->add_option("--order,-N", order, "Number of coefficients (default 500)");
  expand->add_option("--mod,-m", mod, "Reduce coefficients mod m");
  expand->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run registry items");
  std::string filter = "all";
  std::optional<std::size_t> count;
  unsigned threads = 0;
  verify->add_option("--filter", filter, "Ids, groups, prefixes ending in '*', or 'all'");
  verify->add_option("--order,-N", order, "Override the comparison order of identities");
  verify->add_option("--count", count, "Override the scan length of congruences");
  verify->add_option("--format", format)->check(CLI::IsMember(formats));
  verify->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

  auto* scan = app.add_subcommand("scan", "Print B_{s,t}(pn+r) mod m for n < count");
  std::size_t s = 0, t = 0, p = 0, r = 0, scan_count = 0;
  std::uint64_t scan_mod = 0;
  std::size_t max_order = kDefaultMaxOrder;
  scan->add_option("s", s)->required();
  scan->add_option("t", t)->required();
  scan->add_option("p", p)->required();
  scan->add_option("r", r)->required();
  scan->add_option("modulus", scan_mod)->required();
  scan->add_option("count", scan_count)->required();
  scan->add_option("--max-order", max_order, "Largest series order to compute");
  scan->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* list = app.add_subcommand("list", "List registry ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*expand) return cmd_expand(expr_text, order, mod, format);
    if (*verify) return cmd_verify(filter, order, count, format, threads);
    if (*scan) {
      return cmd_scan(s, t, p, r, scan_mod, scan_count, max_order, format);
    }
    if (*list) return cmd_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
