#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "zsym/error.hpp"
#include "zsym/tau.hpp"
#include "zsym/types.hpp"

// Reproduction engine: threshold bisection, the near-threshold
// counterexample, the bound-chain check and grid scans of the two symmetry
// inequalities.
namespace zsym::verify {

// Lower end of the region where the zeta inequality is claimed.
inline constexpr double kZetaThreshold = 6.29073;
inline constexpr double kZetaThresholdBelow = 6.29072;
// Lower end for the τ inequality and the sign-change bracket of H.
inline constexpr double kTauThreshold = 3.8085;
inline constexpr double kTauThresholdBelow = 3.8024;

// Counterexample point s = 0.52 + i t*, compared with 1 - s = 0.48 - i t*.
inline constexpr double kCounterexampleSigma = 0.52;
inline constexpr double kCounterexampleT = 6.2898;
inline constexpr double kCounterexampleBound = -8e-8;

struct ThresholdResult {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
  int iterations;
  double tol;
};

// Bisection for the sign change of an increasing function. Requires
// f(lo) < 0 < f(hi); returns a bracket of width <= tol with the same sign
// pattern.
template <typename Function>
ThresholdResult find_threshold(Function&& f, double lo, double hi,
                               double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("find_threshold: tol must be positive");
  }
  if (!(lo < hi)) throw BracketError("find_threshold: need lo < hi");
  auto evaluate = [&f](double x) {
    double const value = f(x);
    if (!std::isfinite(value)) {
      throw NonfiniteError("find_threshold: nonfinite evaluation at " +
                           std::to_string(x));
    }
    return value;
  };
  double f_lo = evaluate(lo);
  double f_hi = evaluate(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw BracketError("find_threshold: f(lo) < 0 < f(hi) does not hold");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    double const mid = lo + 0.5 * (hi - lo);
    // One ULP left.
    if (mid == lo || mid == hi) break;
    double const f_mid = evaluate(mid);
    ++iterations;
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else if (f_mid > 0.0) {
      hi = mid;
      f_hi = f_mid;
    } else {
      // Exact zero: shrink to the tightest bracket around mid.
      lo = std::nextafter(mid, lo);
      hi = std::nextafter(mid, hi);
      f_lo = evaluate(lo);
      f_hi = evaluate(hi);
      break;
    }
  }
  return {lo, hi, f_lo, f_hi, iterations, tol};
}

struct MonotonicityResult {
  bool increasing = true;
  std::optional<double> first_failure;
};

// Checks f(t + step) > f(t) at t = lo, lo + step, ... while t + step <= hi.
template <typename Function>
MonotonicityResult monotonicity_probe(Function&& f, double lo, double hi,
                                      double step) {
  if (!(lo < hi) || !(step > 0.0)) {
    throw DomainError("monotonicity_probe: need lo < hi and step > 0");
  }
  double previous = f(lo);
  for (long long k = 0;; ++k) {
    double const t = lo + static_cast<double>(k) * step;
    double const next_t = lo + static_cast<double>(k + 1) * step;
    if (next_t > hi) break;
    double const next = f(next_t);
    if (!std::isfinite(previous) || !std::isfinite(next)) {
      throw NonfiniteError("monotonicity_probe: nonfinite evaluation");
    }
    if (!(next > previous)) return {false, t};
    previous = next;
  }
  return {};
}

// |ζ(1 - σ - it)| / |ζ(σ + it)| - 1.
double verify_counterexample(double sigma, double t, EvalConfig const& cfg);
double verify_counterexample(EvalConfig const& cfg);

// Closed on lo; steps lo + k·step strictly below hi, then hi itself.
struct GridRange {
  double lo;
  double hi;
  double step;

  // Parses "lo:hi:step" or a single number (a one-point range).
  static GridRange parse(std::string const& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct ScanPoint {
  double sigma;
  double t;
  double margin;
  bool near_zero;
};

struct ZeroFlag {
  double sigma;
  double t;
  double modulus;
};

struct ScanReport {
  GridRange sigma_range;
  GridRange t_range;
  long long points_checked = 0;
  std::vector<ScanPoint> violations;  // sorted by (t, σ)
  double min_margin = INFINITY;
  double min_margin_sigma = NAN;
  double min_margin_t = NAN;
  std::vector<ZeroFlag> near_zero_flags;
  // Every grid point in (t, σ) order; empty unless requested.
  std::vector<ScanPoint> points;
};

struct ScanOptions {
  unsigned threads = 1;
  // Skips the claimed-region preconditions; used to exhibit failures
  // outside the region.
  bool diagnostic = false;
  double zero_threshold = 1e-6;
  bool keep_points = false;
};

// margin = log|ζ(1-s)| - log|ζ(s)| on the grid.
ScanReport scan_zeta_inequality(GridRange const& sigma_range,
                                GridRange const& t_range,
                                EvalConfig const& cfg,
                                ScanOptions const& options = {});

// margin = log|F(12-s)| - log|F(s)| on the grid.
ScanReport scan_tau_inequality(GridRange const& sigma_range,
                               GridRange const& t_range,
                               tau::TauTable const& table,
                               EvalConfig const& cfg,
                               ScanOptions const& options = {});

// Four layers of the h(s) lower-bound chain at one point:
//   h(s) >= (σ-½)(Re ψ(½+it) - 2πe^{-πt} - log 2π)
//        >= (σ-½)(lower bound of Re ψ(½+it) - 2πe^{-πt} - log 2π)
//        >= (σ-½) G(t).
struct ChainReport {
  double sigma;
  double t;
  double h_exact;
  double rhs_true_digamma;
  double rhs_bound;
  double g_of_t;

  bool ordered(double eps = 1e-9) const {
    return h_exact >= rhs_true_digamma - eps &&
           rhs_true_digamma >= rhs_bound - eps && rhs_bound >= g_of_t - eps;
  }
};

ChainReport check_chain(double sigma, double t, EvalConfig const& cfg = {});

}  // namespace zsym::verify
