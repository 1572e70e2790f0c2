#pragma once

// Command-line frontend: request handling, rendering (table, JSON, CSV) and
// the line-delimited JSON batch mode. The executable in tools/ is a thin
// wrapper around run_command_line().

#include "dwcount/bigint.hpp"
#include "dwcount/counting.hpp"
#include "dwcount/cyclotomic.hpp"
#include "dwcount/dw.hpp"
#include "dwcount/error.hpp"
#include "dwcount/oracle.hpp"
#include "dwcount/parse.hpp"
#include "dwcount/seifert.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace dwcount::cli {

using Json = nlohmann::ordered_json;

enum class Mode { Counts, Dw, Verify, Batch };
enum class OutputFormat { Table, Json, Csv };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConsistency = 2,
  kExitWorkLimit = 3,
};

/// Largest group order accepted without --force.
inline constexpr std::int64_t kMaxGroupOrder = 32;

struct Request {
  SeifertData manifold;
  std::int64_t m = 1;
  Mode mode = Mode::Counts;
  std::optional<std::int64_t> k;
  OutputFormat output = OutputFormat::Table;
  bool verify = false;
  bool float_check = false;
  bool force = false;
  double max_work = WorkBudget::kDefaultCap;
};

/// Test seam: lets tests corrupt intermediate values to exercise the
/// failure paths of the checks.
struct Hooks {
  std::function<void(DwVector&)> tamper_dw;
};

struct Result {
  SeifertData manifold;
  std::int64_t m = 1;
  DwVector dw;
  std::optional<DegreeCountTable> counts;
  BigInt hom_count = 0;
  ConsistencyReport checks;
};

inline void check_guard(const Request& request) {
  require_group_order(request.m);
  if (request.force) return;
  const double estimate = estimate_dw_work(request.manifold, request.m);
  if (request.m > kMaxGroupOrder) {
    throw WorkLimitError(estimate, request.max_work,
                         "m=" + std::to_string(request.m) + " is above the guard of " +
                             std::to_string(kMaxGroupOrder) + "; pass --force to run anyway");
  }
  WorkBudget{request.max_work}.require(estimate, "Dijkgraaf-Witten evaluation; pass --force to run anyway");
}

inline Result compute(const Request& request, const Hooks& hooks = {}) {
  check_guard(request);
  const double unlimited = std::numeric_limits<double>::infinity();
  const WorkBudget budget{request.force ? unlimited : request.max_work};
  OracleBudget oracle;
  if (request.force) oracle = {unlimited, unlimited};

  Result result;
  result.manifold = request.manifold;
  result.m = request.m;
  result.dw = dw_all(request.manifold, request.m, budget);
  if (hooks.tamper_dw) hooks.tamper_dw(result.dw);
  result.hom_count = count_homs(request.manifold, request.m);
  result.checks = verify_consistency(result.dw, result.hom_count);
  if (request.mode == Mode::Verify || request.verify) {
    check_brute_force(request.manifold, request.m, result.checks, oracle);
  }
  if (request.mode == Mode::Verify || request.verify || request.float_check) {
    check_float_agreement(request.manifold, result.dw, result.checks, oracle);
  }
  try {
    result.counts = degree_count_table(result.dw);
  } catch (const Error&) {
    // Reported through result.checks.
  }
  return result;
}

inline Json json_integer(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(x.convert_to<std::int64_t>());
  }
  return Json(x.str());  // beyond 64 bits: decimal string
}

inline Json checks_json(const ConsistencyReport& report) {
  Json checks = Json::object();
  checks["trivial_class"] = report.trivial_class_check;
  checks["nonnegativity"] = report.nonnegativity;
  checks["total"] = report.total_check;
  checks["roundtrip"] = report.roundtrip;
  checks["conjugation_symmetry"] = report.conjugation_symmetry;
  if (report.brute_force_homs) checks["brute_force_homs"] = *report.brute_force_homs;
  if (report.float_agreement) checks["float_agreement"] = *report.float_agreement;
  checks["failures"] = report.failures;
  return checks;
}

// Evaluated from the canonical form: fewer terms, so less cancellation noise.
inline std::complex<double> display_value(const CycloValue& value) {
  return approx_complex(expand(reduce_canonical(value)));
}

inline Json to_json(const Result& result) {
  Json out = Json::object();
  Json manifold = Json::object();
  manifold["genus"] = result.manifold.genus;
  Json pairs = Json::array();
  for (const auto& p : result.manifold.pairs) pairs.push_back(Json::array({p.a, p.b}));
  manifold["pairs"] = std::move(pairs);
  out["manifold"] = std::move(manifold);
  out["m"] = result.m;

  Json dw = Json::array();
  for (std::int64_t l = 0; l < result.m; ++l) {
    const auto& value = result.dw.values[static_cast<std::size_t>(l)];
    const auto approx = display_value(value);
    Json entry = Json::object();
    entry["l"] = l;
    entry["exact"] = to_text(value);
    entry["approx"] = Json::array({approx.real(), approx.imag()});
    dw.push_back(std::move(entry));
  }
  out["dw"] = std::move(dw);

  if (result.counts) {
    Json counts = Json::array();
    for (const auto& c : result.counts->counts) counts.push_back(json_integer(c));
    out["counts"] = std::move(counts);
  } else {
    out["counts"] = nullptr;
  }
  out["hom_count"] = json_integer(result.hom_count);
  out["checks"] = checks_json(result.checks);
  return out;
}

/// One JSON object on a single line.
inline std::string emit_json(const Result& result) { return to_json(result).dump(); }

inline std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

inline void render_report(const Result& result, std::ostream& out) {
  const auto& r = result.checks;
  auto mark = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  out << "hom_count: " << r.hom_count << "\n";
  out << "sum_of_counts: " << r.sum_of_counts << "\n";
  out << "total: " << mark(r.total_check) << "\n";
  out << "trivial_class: " << mark(r.trivial_class_check) << "\n";
  out << "nonnegativity: " << mark(r.nonnegativity) << "\n";
  out << "roundtrip: " << mark(r.roundtrip) << "\n";
  out << "conjugation_symmetry: " << mark(r.conjugation_symmetry) << "\n";
  if (r.brute_force_homs) out << "brute_force_homs: " << mark(*r.brute_force_homs) << "\n";
  if (r.float_agreement) out << "float_agreement: " << mark(*r.float_agreement) << "\n";
  for (const auto& f : r.failures) out << "failure: " << f << "\n";
}

inline void render(const Request& request, const Result& result, std::ostream& out) {
  if (request.output == OutputFormat::Json) {
    out << emit_json(result) << "\n";
    return;
  }
  const bool csv = request.output == OutputFormat::Csv;
  switch (request.mode) {
    case Mode::Counts: {
      if (!result.counts) break;
      if (csv) out << "k,count\n";
      std::vector<std::int64_t> ks;
      if (request.k) {
        ks.push_back(*request.k);
      } else {
        for (std::int64_t k = 0; k < result.m; ++k) ks.push_back(k);
      }
      for (std::int64_t k : ks) {
        if (csv) {
          out << k << "," << result.counts->at(k) << "\n";
        } else {
          out << "k=" << k << ": " << result.counts->at(k) << "\n";
        }
      }
      break;
    }
    case Mode::Dw: {
      if (csv) out << "l,exact,re,im\n";
      for (std::int64_t l = 0; l < result.m; ++l) {
        const auto& value = result.dw.values[static_cast<std::size_t>(l)];
        const auto z = display_value(value);
        if (csv) {
          out << l << "," << to_text(value) << "," << std::setprecision(17) << z.real() << "," << z.imag()
              << "\n";
        } else {
          out << "l=" << l << ": " << to_text(value) << "  ~ " << format_complex(z) << "\n";
        }
      }
      break;
    }
    case Mode::Verify:
    case Mode::Batch:
      break;
  }
  if (request.mode == Mode::Verify) {
    if (csv) {
      out << "check,passed\n";
      out << "total," << result.checks.total_check << "\n";
      out << "trivial_class," << result.checks.trivial_class_check << "\n";
      out << "nonnegativity," << result.checks.nonnegativity << "\n";
      out << "roundtrip," << result.checks.roundtrip << "\n";
      out << "conjugation_symmetry," << result.checks.conjugation_symmetry << "\n";
      if (result.checks.brute_force_homs) out << "brute_force_homs," << *result.checks.brute_force_homs << "\n";
      if (result.checks.float_agreement) out << "float_agreement," << *result.checks.float_agreement << "\n";
    } else {
      render_report(result, out);
    }
  } else if (!result.checks.all_passed() && !csv) {
    render_report(result, out);
  }
}

inline int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::WorkLimitExceeded ? kExitWorkLimit : kExitUsage;
}

/// Runs a single (non-batch) request; returns the process exit code.
inline int run(const Request& request, std::ostream& out, std::ostream& err, const Hooks& hooks = {}) {
  try {
    for (const auto& warning : seifert_warnings(request.manifold)) err << "warning: " << warning << "\n";
    const Result result = compute(request, hooks);
    render(request, result, out);
    return result.checks.all_passed() ? kExitOk : kExitConsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

/// Output line for one batch input line, plus its exit code.
struct BatchLine {
  std::string json;
  int exit_code = kExitOk;
};

inline BatchLine run_batch_line(const std::string& line, std::size_t line_number, const Request& defaults) {
  auto error_line = [&](const std::string& kind, const std::string& message, int code) {
    Json out = Json::object();
    out["line"] = line_number;
    out["error"] = Json::object({{"kind", kind}, {"message", message}, {"exit", code}});
    return BatchLine{out.dump(), code};
  };
  try {
    const Json input = Json::parse(line);
    if (!input.is_object() || !input.contains("manifold") || !input["manifold"].is_string() ||
        !input.contains("m") || !input["m"].is_number_integer()) {
      return error_line("InvalidRequest", R"msg(expected {"manifold":"MO(...)","m":int})msg", kExitUsage);
    }
    Request request = defaults;
    request.mode = Mode::Counts;
    request.manifold = parse_seifert(input["manifold"].get<std::string>());
    request.m = input["m"].get<std::int64_t>();
    const Result result = compute(request);
    return {emit_json(result), result.checks.all_passed() ? kExitOk : kExitConsistency};
  } catch (const Json::exception& e) {
    return error_line("InvalidJson", e.what(), kExitUsage);
  } catch (const Error& e) {
    return error_line(to_string(e.kind()), e.what(), exit_code_for(e));
  }
}

/// Line-delimited JSON in, line-delimited JSON out, same number of lines in
/// the same order. Lines are evaluated concurrently. Returns the largest
/// per-line exit code.
inline int run_batch(std::istream& in, std::ostream& out, const Request& defaults) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  int worst = kExitOk;
  for (std::size_t start = 0; start < lines.size(); start += workers) {
    const std::size_t stop = std::min(lines.size(), start + workers);
    std::vector<std::future<BatchLine>> pending;
    for (std::size_t i = start; i < stop; ++i) {
      pending.push_back(std::async(std::launch::async, run_batch_line, std::cref(lines[i]), i + 1,
                                   std::cref(defaults)));
    }
    for (auto& f : pending) {
      BatchLine result = f.get();
      worst = std::max(worst, result.exit_code);
      out << result.json << "\n";
    }
  }
  return worst;
}

inline std::optional<double> max_work_from_env() {
  const char* raw = std::getenv("DWCOUNT_MAX_WORK");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0)) return std::nullopt;
  return value;
}

/// Full CLI: argv (without the program name) to exit code.
inline int run_command_line(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                            std::ostream& err) {
  CLI::App app{"Dijkgraaf-Witten invariants of Seifert manifolds and degree counts of maps to lens spaces",
               "dwcount"};
  app.require_subcommand(1);

  std::string manifold_text;
  std::int64_t m = 0;
  std::int64_t k = 0;
  bool json = false, csv = false, verify = false, float_check = false, force = false;
  double max_work = max_work_from_env().value_or(WorkBudget::kDefaultCap);

  auto add_common = [&](CLI::App* sub, bool needs_manifold) {
    if (needs_manifold) {
      sub->add_option("--manifold", manifold_text, "Seifert data, e.g. \"MO(0;(1,2))\"")->required();
      sub->add_option("--m", m, "order of the cyclic group Z/m")->required()->check(CLI::PositiveNumber);
    }
    auto* j = sub->add_flag("--json", json, "emit one JSON object");
    auto* c = sub->add_flag("--csv", csv, "emit CSV");
    j->excludes(c);
    sub->add_flag("--verify", verify, "also run the brute-force and floating-point cross-checks");
    sub->add_flag("--float-check", float_check, "compare exact values against a floating-point evaluation");
    sub->add_option("--max-work", max_work, "work budget (overrides DWCOUNT_MAX_WORK)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--force", force, "ignore the m and work guards");
  };

  auto* counts_cmd = app.add_subcommand("counts", "number of homotopy classes per degree class");
  add_common(counts_cmd, true);
  auto* k_opt = counts_cmd->add_option("--k", k, "report a single degree k");
  auto* dw_cmd = app.add_subcommand("dw", "Dijkgraaf-Witten invariants Z^l for every l");
  add_common(dw_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify", "run every consistency and oracle check");
  add_common(verify_cmd, true);
  auto* batch_cmd = app.add_subcommand("batch", "line-delimited JSON requests on stdin");
  add_common(batch_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Request request;
  request.output = json ? OutputFormat::Json : csv ? OutputFormat::Csv : OutputFormat::Table;
  request.verify = verify;
  request.float_check = float_check;
  request.force = force;
  request.max_work = max_work;

  if (batch_cmd->parsed()) {
    request.mode = Mode::Batch;
    return run_batch(in, out, request);
  }

  request.mode = counts_cmd->parsed() ? Mode::Counts : dw_cmd->parsed() ? Mode::Dw : Mode::Verify;
  if (counts_cmd->parsed() && k_opt->count() > 0) request.k = k;
  request.m = m;
  try {
    request.manifold = parse_seifert(manifold_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(request, out, err);
}

}  // namespace dwcount::cli
