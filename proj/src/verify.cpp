#include "zsym/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <thread>

#include "zsym/bounds.hpp"
#include "zsym/specfun.hpp"

namespace zsym::verify {
namespace {

using std::numbers::pi;

double parse_double(std::string const& text) {
  double value = 0.0;
  auto const* begin = text.data();
  auto const* end = text.data() + text.size();
  auto const [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw DomainError("cannot parse number '" + text + "'");
  }
  return value;
}

// Evaluates margin(σ, t) -> (margin, |f(s)|) over the grid, splitting rows
// of t across worker threads. The result does not depend on the split.
template <typename PointFunction>
ScanReport run_scan(GridRange const& sigma_range, GridRange const& t_range,
                    ScanOptions const& options, PointFunction const& point) {
  auto const sigmas = sigma_range.values();
  auto const ts = t_range.values();
  std::size_t const total = sigmas.size() * ts.size();

  struct Evaluated {
    double margin;
    double modulus;
  };
  std::vector<Evaluated> values(total);
  unsigned const workers =
      std::max(1u, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(ts.size())));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned worker) {
    try {
      for (std::size_t row = worker; row < ts.size(); row += workers) {
        for (std::size_t col = 0; col < sigmas.size(); ++col) {
          auto const [margin, modulus] = point(sigmas[col], ts[row]);
          values[row * sigmas.size() + col] = {margin, modulus};
        }
      }
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto const& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  ScanReport report;
  report.sigma_range = sigma_range;
  report.t_range = t_range;
  report.points_checked = static_cast<long long>(total);
  if (options.keep_points) report.points.reserve(total);
  // Row-major over t then σ, which is already the (t, σ) sort order.
  for (std::size_t row = 0; row < ts.size(); ++row) {
    for (std::size_t col = 0; col < sigmas.size(); ++col) {
      auto const& v = values[row * sigmas.size() + col];
      bool const near_zero = v.modulus < options.zero_threshold;
      ScanPoint const p{sigmas[col], ts[row], v.margin, near_zero};
      if (options.keep_points) report.points.push_back(p);
      if (near_zero) {
        report.near_zero_flags.push_back({p.sigma, p.t, v.modulus});
        continue;
      }
      if (!(v.margin > 0.0)) report.violations.push_back(p);
      if (v.margin < report.min_margin) {
        report.min_margin = v.margin;
        report.min_margin_sigma = p.sigma;
        report.min_margin_t = p.t;
      }
    }
  }
  return report;
}

}  // namespace

double verify_counterexample(double sigma, double t, EvalConfig const& cfg) {
  ComplexValue const s{sigma, t};
  double const reflected = std::abs(specfun::zeta(1.0 - s, cfg));
  double const direct = std::abs(specfun::zeta(s, cfg));
  return reflected / direct - 1.0;
}

double verify_counterexample(EvalConfig const& cfg) {
  if (!(cfg.target_abs_err <= 1e-12)) {
    throw AccuracyError(
        "verify_counterexample: target_abs_err must be <= 1e-12");
  }
  return verify_counterexample(kCounterexampleSigma, kCounterexampleT, cfg);
}

GridRange GridRange::parse(std::string const& text) {
  auto const first = text.find(':');
  if (first == std::string::npos) {
    double const x = parse_double(text);
    return {x, x, 1.0};
  }
  auto const second = text.find(':', first + 1);
  if (second == std::string::npos) {
    throw DomainError("range must be lo:hi:step, got '" + text + "'");
  }
  GridRange range{parse_double(text.substr(0, first)),
                  parse_double(text.substr(first + 1, second - first - 1)),
                  parse_double(text.substr(second + 1))};
  if (!(range.lo <= range.hi)) {
    throw DomainError("range '" + text + "' has lo > hi");
  }
  if (!(range.step > 0.0)) {
    throw DomainError("range '" + text + "' needs step > 0");
  }
  return range;
}

std::vector<double> GridRange::values() const {
  if (!(lo <= hi) || !(step > 0.0) || !std::isfinite(lo) ||
      !std::isfinite(hi) || !std::isfinite(step)) {
    throw DomainError("GridRange: invalid range " + to_string());
  }
  std::vector<double> out;
  double const slack = 1e-9 * step;
  for (long long k = 0;; ++k) {
    double const x = lo + static_cast<double>(k) * step;
    if (x >= hi - slack) break;
    out.push_back(x);
  }
  out.push_back(hi);
  return out;
}

std::string GridRange::to_string() const {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%.17g:%.17g:%.17g", lo, hi, step);
  return buffer;
}

ScanReport scan_zeta_inequality(GridRange const& sigma_range,
                                GridRange const& t_range,
                                EvalConfig const& cfg,
                                ScanOptions const& options) {
  cfg.validate();
  if (!options.diagnostic) {
    if (!(sigma_range.lo > 0.5)) {
      throw DomainError("scan_zeta_inequality: sigma must exceed 1/2");
    }
    if (!(t_range.lo >= kZetaThreshold)) {
      throw DomainError("scan_zeta_inequality: t must be >= 6.29073");
    }
  }
  return run_scan(sigma_range, t_range, options, [&cfg](double sigma, double t) {
    ComplexValue const s{sigma, t};
    double const direct = std::abs(specfun::zeta(s, cfg));
    double const reflected = std::abs(specfun::zeta(1.0 - s, cfg));
    return std::pair{std::log(reflected) - std::log(direct), direct};
  });
}

ScanReport scan_tau_inequality(GridRange const& sigma_range,
                               GridRange const& t_range,
                               tau::TauTable const& table,
                               EvalConfig const& cfg,
                               ScanOptions const& options) {
  cfg.validate();
  if (!options.diagnostic) {
    if (!(sigma_range.lo > 6.0 && sigma_range.hi < 6.5)) {
      throw DomainError("scan_tau_inequality: sigma must lie in (6, 13/2)");
    }
    if (!(t_range.lo >= kTauThreshold)) {
      throw DomainError("scan_tau_inequality: t must be >= 3.8085");
    }
  }
  return run_scan(sigma_range, t_range, options,
                  [&cfg, &table](double sigma, double t) {
                    ComplexValue const s{sigma, t};
                    double const direct = std::abs(tau::f_value(s, table, cfg));
                    double const reflected =
                        std::abs(tau::f_value(12.0 - s, table, cfg));
                    return std::pair{std::log(reflected) - std::log(direct),
                                     direct};
                  });
}

ChainReport check_chain(double sigma, double t, EvalConfig const& cfg) {
  if (!(sigma > 0.5) || !(t > 0.0)) {
    throw DomainError("check_chain: requires sigma > 1/2 and t > 0");
  }
  double const offset = sigma - 0.5;
  double const cos_term = 2.0 * pi * std::exp(-pi * t) + std::log(2.0 * pi);
  ChainReport report;
  report.sigma = sigma;
  report.t = t;
  report.h_exact = specfun::h_value({sigma, t}, cfg);
  report.rhs_true_digamma =
      offset * (specfun::re_digamma(0.5, t, cfg) - cos_term);
  report.rhs_bound =
      offset * (bounds::lower_bound_re_digamma(0.5, t) - cos_term);
  report.g_of_t = offset * bounds::G(t);
  return report;
}

}  // namespace zsym::verify
