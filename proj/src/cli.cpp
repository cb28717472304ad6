#include "zsym/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "zsym/bounds.hpp"
#include "zsym/specfun.hpp"
#include "zsym/tau.hpp"
#include "zsym/verify.hpp"

namespace zsym::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr char const* kSchemaVersion = "1";

// Usage problems found after CLI11 has accepted the flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  double precision = 1e-12;
  unsigned threads = 1;
  std::string json_path;
  bool no_timings = false;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  GlobalOptions const& global;
  std::chrono::steady_clock::time_point start;

  EvalConfig config() const {
    auto cfg = EvalConfig::with_precision(global.precision);
    try {
      cfg.validate();
    } catch (DomainError const& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

Json number(double value) {
  if (std::isfinite(value)) return value;
  return nullptr;
}

Json config_json(EvalConfig const& cfg) {
  return Json{{"target_abs_err", cfg.target_abs_err},
              {"em_cutoff_n", cfg.em_cutoff_n},
              {"em_correction_terms", cfg.em_correction_terms},
              {"stirling_shift_min_modulus", cfg.stirling_shift_min_modulus},
              {"series_nmax", cfg.series_nmax}};
}

void emit_record(Context const& ctx, std::string const& command,
                 Json parameters, Json results) {
  if (ctx.global.json_path.empty()) return;
  long long timing = 0;
  if (!ctx.global.no_timings) {
    timing = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - ctx.start)
                 .count();
  }
  Json record{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"timings_ms", timing}};
  std::string const text = record.dump(2) + "\n";
  if (ctx.global.json_path == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream file(ctx.global.json_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + ctx.global.json_path);
  file << text;
}

std::ostream& open_output(std::string const& path, std::ofstream& file,
                          std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  return file;
}

Json threshold_json(verify::ThresholdResult const& r) {
  return Json{{"lo", r.lo},       {"hi", r.hi},
              {"f_lo", r.f_lo},   {"f_hi", r.f_hi},
              {"iterations", r.iterations}, {"tol", r.tol}};
}

// --- thresholds -----------------------------------------------------------

struct ThresholdsOptions {
  std::string function = "both";
  double tol = 1e-6;
};

int cmd_thresholds(Context const& ctx, ThresholdsOptions const& opts) {
  if (!(opts.tol > 0.0)) throw UsageError("--tol must be positive");

  struct Target {
    char const* name;
    double (*f)(double);
    double bracket_lo;
    double bracket_hi;
    double claim_lo;
    double claim_hi;
    bool strict;  // open or closed containment
  };
  std::vector<Target> targets;
  if (opts.function == "G" || opts.function == "both") {
    targets.push_back({"G", bounds::G, 6.0, 7.0, verify::kZetaThresholdBelow,
                       verify::kZetaThreshold, false});
  }
  if (opts.function == "H" || opts.function == "both") {
    targets.push_back({"H", bounds::H, 3.5, 4.0, verify::kTauThresholdBelow,
                       verify::kTauThreshold, true});
  }

  bool all_ok = true;
  Json results = Json::object();
  for (auto const& target : targets) {
    Json entry;
    bool ok = false;
    try {
      auto const r = verify::find_threshold(target.f, target.bracket_lo,
                                            target.bracket_hi, opts.tol);
      bool const inside = target.strict
                              ? (r.lo > target.claim_lo && r.hi < target.claim_hi)
                              : (r.lo >= target.claim_lo && r.hi <= target.claim_hi);
      double const f_claim_lo = target.f(target.claim_lo);
      double const f_claim_hi = target.f(target.claim_hi);
      bool const signs = f_claim_lo < 0.0 && f_claim_hi > 0.0;
      ok = inside && signs;
      entry = threshold_json(r);
      entry["claim_lo"] = target.claim_lo;
      entry["claim_hi"] = target.claim_hi;
      entry["f_claim_lo"] = f_claim_lo;
      entry["f_claim_hi"] = f_claim_hi;
      entry["contained"] = inside;
      entry["pass"] = ok;
      ctx.out << target.name << ": root in [" << format_double(r.lo) << ", "
              << format_double(r.hi) << "] after " << r.iterations
              << " bisections; " << target.name << "("
              << format_double(target.claim_lo) << ") = "
              << format_double(f_claim_lo) << ", " << target.name << "("
              << format_double(target.claim_hi) << ") = "
              << format_double(f_claim_hi) << " -> "
              << (ok ? "PASS" : "FAIL") << "\n";
    } catch (BracketError const& e) {
      entry = Json{{"error", e.what()}, {"pass", false}};
      ctx.out << target.name << ": FAIL (" << e.what() << ")\n";
    }
    all_ok = all_ok && ok;
    results[target.name] = std::move(entry);
  }
  emit_record(ctx, "thresholds",
              Json{{"function", opts.function}, {"tol", opts.tol}},
              std::move(results));
  return all_ok ? kVerified : kClaimFailed;
}

// --- counterexample -------------------------------------------------------

struct CounterexampleOptions {
  double sigma = verify::kCounterexampleSigma;
  double t = verify::kCounterexampleT;
};

int cmd_counterexample(Context const& ctx, CounterexampleOptions const& opts) {
  auto const cfg = ctx.config();
  if (!(cfg.target_abs_err <= 1e-12)) {
    throw UsageError(
        "--precision must be <= 1e-12 to resolve a 1e-8 ratio deviation");
  }
  double const value = verify::verify_counterexample(opts.sigma, opts.t, cfg);
  bool const violation = value < 0.0;
  bool const pass = value <= verify::kCounterexampleBound;
  ctx.out << "|zeta(" << format_double(1.0 - opts.sigma) << " - "
          << format_double(opts.t) << "i)| / |zeta("
          << format_double(opts.sigma) << " + " << format_double(opts.t)
          << "i)| - 1 = " << format_double(value) << "\n";
  ctx.out << (violation ? "violation" : "no violation") << "; bound "
          << format_double(verify::kCounterexampleBound) << " "
          << (pass ? "PASS" : "FAIL") << "\n";
  emit_record(ctx, "counterexample",
              Json{{"sigma", opts.sigma},
                   {"t", opts.t},
                   {"config", config_json(cfg)}},
              Json{{"ratio_minus_one", value},
                   {"violation", violation},
                   {"bound", verify::kCounterexampleBound},
                   {"pass", pass}});
  return pass ? kVerified : kClaimFailed;
}

// --- scan -----------------------------------------------------------------

struct ScanCliOptions {
  std::string target;
  std::string sigma;
  std::string t;
  std::string csv_path;
  bool diagnostic = false;
  int nmax = 256;
  double zero_threshold = 1e-6;
};

verify::GridRange parse_range(std::string const& text) {
  try {
    return verify::GridRange::parse(text);
  } catch (DomainError const& e) {
    throw UsageError(e.what());
  }
}

int cmd_scan(Context const& ctx, ScanCliOptions const& opts) {
  auto const cfg = ctx.config();
  auto const sigma = parse_range(opts.sigma);
  auto const t = parse_range(opts.t);
  if (opts.nmax < 1) throw UsageError("--nmax must be >= 1");
  verify::ScanOptions scan_options;
  scan_options.threads = ctx.global.threads;
  scan_options.diagnostic = opts.diagnostic;
  scan_options.zero_threshold = opts.zero_threshold;
  scan_options.keep_points = !opts.csv_path.empty();

  verify::ScanReport report;
  try {
    if (opts.target == "zeta") {
      report = verify::scan_zeta_inequality(sigma, t, cfg, scan_options);
    } else {
      auto const table = tau::tau_table(opts.nmax);
      report = verify::scan_tau_inequality(sigma, t, table, cfg, scan_options);
    }
  } catch (DomainError const& e) {
    // Region preconditions.
    throw UsageError(e.what());
  }

  if (!opts.csv_path.empty()) {
    std::ofstream file;
    std::ostream& csv = open_output(opts.csv_path, file, ctx.out);
    csv << "sigma,t,margin,flag\n";
    for (auto const& p : report.points) {
      csv << format_double(p.sigma) << ',' << format_double(p.t) << ','
          << format_double(p.margin) << ','
          << (p.near_zero ? "near_zero" : (p.margin > 0.0 ? "ok" : "violation"))
          << '\n';
    }
  }

  Json violations = Json::array();
  for (auto const& v : report.violations) {
    violations.push_back(
        Json{{"sigma", v.sigma}, {"t", v.t}, {"margin", number(v.margin)}});
  }
  Json flags = Json::array();
  for (auto const& f : report.near_zero_flags) {
    flags.push_back(Json{{"sigma", f.sigma}, {"t", f.t}, {"modulus", f.modulus}});
  }
  bool const pass = report.violations.empty();
  if (opts.csv_path != "-") {
    ctx.out << opts.target << " scan: " << report.points_checked
            << " points, " << report.violations.size() << " violations, "
            << report.near_zero_flags.size() << " near-zero flags, min margin "
            << format_double(report.min_margin) << " at (sigma, t) = ("
            << format_double(report.min_margin_sigma) << ", "
            << format_double(report.min_margin_t) << ") -> "
            << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit_record(ctx, "scan",
              Json{{"target", opts.target},
                   {"sigma", sigma.to_string()},
                   {"t", t.to_string()},
                   {"diagnostic", opts.diagnostic},
                   {"nmax", opts.nmax},
                   {"zero_threshold", opts.zero_threshold},
                   {"threads", ctx.global.threads},
                   {"config", config_json(cfg)}},
              Json{{"points_checked", report.points_checked},
                   {"violations", std::move(violations)},
                   {"min_margin", number(report.min_margin)},
                   {"min_margin_at",
                    Json{{"sigma", number(report.min_margin_sigma)},
                         {"t", number(report.min_margin_t)}}},
                   {"near_zero_flags", std::move(flags)},
                   {"pass", pass}});
  return pass ? kVerified : kClaimFailed;
}

// --- eval -----------------------------------------------------------------

struct EvalOptions {
  std::string function;
  std::vector<std::string> points;
  int nmax = 256;
};

double require_real(ComplexValue z, std::string const& function) {
  if (z.imag() != 0.0) {
    throw UsageError(function + " takes a real argument");
  }
  return z.real();
}

int cmd_eval(Context const& ctx, EvalOptions const& opts) {
  auto const cfg = ctx.config();
  std::optional<tau::TauTable> table;
  if (opts.function == "F") {
    if (opts.nmax < 1) throw UsageError("--nmax must be >= 1");
    table = tau::tau_table(opts.nmax);
  }

  std::vector<ComplexValue> points;
  for (auto const& text : opts.points) {
    try {
      points.push_back(parse_complex(text));
    } catch (DomainError const& e) {
      throw UsageError(e.what());
    }
  }

  ctx.out << "# target_abs_err=" << format_double(cfg.target_abs_err)
          << " em_cutoff_n=" << cfg.em_cutoff_n
          << " em_correction_terms=" << cfg.em_correction_terms
          << " stirling_shift_min_modulus="
          << format_double(cfg.stirling_shift_min_modulus) << "\n";

  Json values = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    ComplexValue const s = points[i];
    std::optional<ComplexValue> complex_result;
    double real_result = 0.0;
    std::string const& f = opts.function;
    if (f == "zeta") {
      complex_result = specfun::zeta(s, cfg);
    } else if (f == "F") {
      complex_result = tau::f_value(s, *table, cfg);
    } else if (f == "log_gamma") {
      complex_result = specfun::log_gamma(s, cfg);
    } else if (f == "G") {
      real_result = bounds::G(require_real(s, f));
    } else if (f == "H") {
      real_result = bounds::H(require_real(s, f));
    } else if (f == "J") {
      real_result = bounds::J(s.real(), s.imag());
    } else if (f == "h") {
      real_result = specfun::h_value(s, cfg);
    } else {
      real_result = specfun::re_digamma(s.real(), s.imag(), cfg);
    }
    Json entry{{"point", opts.points[i]}};
    ctx.out << f << "(" << opts.points[i] << ") = ";
    if (complex_result) {
      entry["re"] = complex_result->real();
      entry["im"] = complex_result->imag();
      ctx.out << format_double(complex_result->real())
              << (complex_result->imag() < 0.0 ? " - " : " + ")
              << format_double(std::abs(complex_result->imag())) << "i\n";
    } else {
      entry["value"] = real_result;
      ctx.out << format_double(real_result) << "\n";
    }
    values.push_back(std::move(entry));
  }
  emit_record(ctx, "eval",
              Json{{"function", opts.function},
                   {"points", opts.points},
                   {"config", config_json(cfg)}},
              Json{{"values", std::move(values)}});
  return kVerified;
}

// --- tau-table ------------------------------------------------------------

struct TauTableOptions {
  int nmax = 0;
  bool check = false;
  std::string csv_path;
};

int cmd_tau_table(Context const& ctx, TauTableOptions const& opts) {
  if (opts.nmax < 1) throw UsageError("--nmax must be >= 1");
  auto const table = tau::tau_table(opts.nmax);
  {
    std::ofstream file;
    std::ostream& csv = open_output(opts.csv_path, file, ctx.out);
    csv << "n,tau\n";
    for (int n = 1; n <= table.n_max(); ++n) {
      csv << n << ',' << tau::to_string(table(n)) << '\n';
    }
  }
  Json results{{"n_max", opts.nmax}};
  bool pass = true;
  if (opts.check) {
    auto const mult = tau::check_multiplicativity(table);
    auto const hecke = tau::check_hecke(table);
    auto const deligne = tau::check_deligne(table);
    pass = mult.ok && hecke.ok && deligne.ok;
    results["multiplicativity"] = Json{{"ok", mult.ok}, {"detail", mult.detail}};
    results["hecke"] = Json{{"ok", hecke.ok}, {"detail", hecke.detail}};
    results["deligne"] = Json{{"ok", deligne.ok}, {"detail", deligne.detail}};
    results["pass"] = pass;
    ctx.err << "check: multiplicativity " << (mult.ok ? "ok" : mult.detail)
            << ", hecke " << (hecke.ok ? "ok" : hecke.detail) << ", deligne "
            << (deligne.ok ? "ok" : deligne.detail) << "\n";
  }
  emit_record(ctx, "tau-table", Json{{"nmax", opts.nmax}, {"check", opts.check}},
              std::move(results));
  return pass ? kVerified : kClaimFailed;
}

bool parse_number(std::string_view text, double& value) {
  if (text.empty()) return false;
  // from_chars rejects a leading '+'.
  if (text.front() == '+') text.remove_prefix(1);
  auto const [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

ComplexValue parse_complex(std::string const& raw) {
  auto fail = [&raw]() -> ComplexValue {
    throw DomainError("malformed complex literal '" + raw + "'");
  };
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(c);
  }
  if (text.empty()) return fail();

  if (text.back() != 'i' && text.back() != 'j') {
    double re = 0.0;
    if (!parse_number(text, re) || !std::isfinite(re)) return fail();
    return {re, 0.0};
  }
  std::string_view body(text.data(), text.size() - 1);
  // Split at the last sign that does not follow an exponent marker.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos
                                   ? std::string_view{}
                                   : body.substr(0, split);
  std::string_view imag_part =
      split == std::string_view::npos ? body : body.substr(split);
  double re = 0.0;
  if (!real_part.empty() && !parse_number(real_part, re)) return fail();
  double im = 0.0;
  if (imag_part.empty() || imag_part == "+") {
    im = 1.0;
  } else if (imag_part == "-") {
    im = -1.0;
  } else if (!parse_number(imag_part, im)) {
    return fail();
  }
  if (!std::isfinite(re) || !std::isfinite(im)) return fail();
  return {re, im};
}

int run(int argc, char const* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numerical reproduction of the zeta and Ramanujan tau "
               "symmetry inequalities"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--precision", global.precision,
                 "Target absolute error for special functions")
      ->envname("ZS_PRECISION")
      ->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads for scans")
      ->envname("ZS_THREADS")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--json", global.json_path,
                 "Write the structured report to this path ('-' = stdout)");
  app.add_flag("--no-timings", global.no_timings,
               "Report timings_ms as 0 so output is byte-reproducible");

  ThresholdsOptions thresholds;
  auto* thresholds_cmd =
      app.add_subcommand("thresholds", "Bisect G and H for their sign changes");
  thresholds_cmd->add_option("--function", thresholds.function)
      ->check(CLI::IsMember({"G", "H", "both"}))
      ->capture_default_str();
  thresholds_cmd->add_option("--tol", thresholds.tol, "Bracket width")
      ->capture_default_str();

  CounterexampleOptions counterexample;
  auto* counterexample_cmd = app.add_subcommand(
      "counterexample", "Evaluate |zeta(1-s)|/|zeta(s)| - 1 below threshold");
  counterexample_cmd->add_option("--sigma", counterexample.sigma)
      ->capture_default_str();
  counterexample_cmd->add_option("--t", counterexample.t)->capture_default_str();

  ScanCliOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Grid scan of an inequality");
  scan_cmd->add_option("--target", scan.target)
      ->required()
      ->check(CLI::IsMember({"zeta", "tau"}));
  scan_cmd->add_option("--sigma", scan.sigma, "lo:hi:step")->required();
  scan_cmd->add_option("--t", scan.t, "lo:hi:step")->required();
  scan_cmd->add_option("--csv", scan.csv_path,
                       "Per-point margins as CSV ('-' = stdout)");
  scan_cmd->add_flag("--diagnostic", scan.diagnostic,
                     "Allow grids outside the claimed regions");
  scan_cmd->add_option("--nmax", scan.nmax, "tau table length")
      ->capture_default_str();
  scan_cmd->add_option("--zero-threshold", scan.zero_threshold)
      ->capture_default_str();

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function at points");
  eval_cmd->add_option("function", eval.function)
      ->required()
      ->check(CLI::IsMember(
          {"zeta", "F", "G", "H", "J", "h", "log_gamma", "re_digamma"}));
  eval_cmd->add_option("points", eval.points, "Complex literals like 0.5+10i")
      ->required();
  eval_cmd->add_option("--nmax", eval.nmax, "tau table length for F")
      ->capture_default_str();

  TauTableOptions tau_table;
  auto* tau_cmd = app.add_subcommand("tau-table", "Emit n, tau(n) as CSV");
  tau_cmd->add_option("--nmax", tau_table.nmax)->required();
  tau_cmd->add_flag("--check", tau_table.check,
                    "Verify multiplicativity, Hecke recurrence and size bound");
  tau_cmd->add_option("--csv", tau_table.csv_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsageError;
  }

  Context const ctx{out, err, global, std::chrono::steady_clock::now()};
  try {
    if (*thresholds_cmd) return cmd_thresholds(ctx, thresholds);
    if (*counterexample_cmd) return cmd_counterexample(ctx, counterexample);
    if (*scan_cmd) return cmd_scan(ctx, scan);
    if (*eval_cmd) return cmd_eval(ctx, eval);
    if (*tau_cmd) return cmd_tau_table(ctx, tau_table);
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (OverflowError const& e) {
    err << "overflow: " << e.what() << " (n = " << e.index() << ")\n";
    return kNumericalFailure;
  } catch (Error const& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kUsageError;
}

}  // namespace zsym::cli
