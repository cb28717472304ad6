#include "zsym/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace zsym {

void EvalConfig::validate() const {
  if (!(target_abs_err > 0.0) || !std::isfinite(target_abs_err)) {
    throw DomainError("EvalConfig: target_abs_err must be positive");
  }
  if (em_cutoff_n < 10) {
    throw DomainError("EvalConfig: em_cutoff_n must be >= 10");
  }
  if (em_correction_terms < 2 || em_correction_terms > 15) {
    throw DomainError("EvalConfig: em_correction_terms must be in [2, 15]");
  }
  if (!(stirling_shift_min_modulus >= 8.0)) {
    throw DomainError("EvalConfig: stirling_shift_min_modulus must be >= 8");
  }
  if (series_nmax < 1) {
    throw DomainError("EvalConfig: series_nmax must be positive");
  }
}

EvalConfig EvalConfig::with_precision(double target_abs_err) {
  EvalConfig cfg;
  cfg.target_abs_err = target_abs_err;
  return cfg;
}

namespace specfun {
namespace {

using std::numbers::pi;

constexpr int kMaxBernoulliIndex = 16;

// B_{2k} for k = 1..16.
constexpr std::array<double, kMaxBernoulliIndex> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

constexpr int kMaxStirlingTerms = 15;
constexpr int kIncompleteGammaMaxIter = 100000;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

bool is_gamma_pole(ComplexValue s) {
  return s.imag() == 0.0 && is_nonpositive_integer(s.real());
}

// Shift s upward until the asymptotic series is accurate. Stirling needs
// both a large modulus and a nonnegative real part.
bool needs_shift(ComplexValue z, EvalConfig const& cfg) {
  return std::abs(z) < cfg.stirling_shift_min_modulus || z.real() < 0.0;
}

ComplexValue stirling_log_gamma(ComplexValue z, EvalConfig const& cfg) {
  ComplexValue result =
      (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi);
  ComplexValue const inv_z = 1.0 / z;
  ComplexValue const inv_z2 = inv_z * inv_z;
  ComplexValue power = inv_z;
  double const cutoff = 0.01 * cfg.target_abs_err;
  for (int k = 1; k <= kMaxStirlingTerms; ++k) {
    ComplexValue const term =
        kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
    result += term;
    if (std::abs(term) < cutoff) {
      return result;
    }
    power *= inv_z2;
  }
  throw AccuracyError("log_gamma: Stirling series did not reach target error");
}

ComplexValue asymptotic_digamma(ComplexValue z, EvalConfig const& cfg) {
  ComplexValue result = std::log(z) - 0.5 / z;
  ComplexValue const inv_z2 = 1.0 / (z * z);
  ComplexValue power = inv_z2;
  double const cutoff = 0.01 * cfg.target_abs_err;
  for (int k = 1; k <= kMaxStirlingTerms; ++k) {
    ComplexValue const term = kBernoulli[k - 1] / (2.0 * k) * power;
    result -= term;
    if (std::abs(term) < cutoff) {
      return result;
    }
    power *= inv_z2;
  }
  throw AccuracyError("digamma: asymptotic series did not reach target error");
}

// log cos(z) without overflow: for |Im z| >= 1 factor out the dominant
// exponential, cos z = e^{∓iz} (1 + e^{±2iz}) / 2.
ComplexValue log_cos(ComplexValue z) {
  constexpr ComplexValue i{0.0, 1.0};
  double const y = z.imag();
  if (std::abs(y) < 1.0) {
    return std::log(std::cos(z));
  }
  if (y > 0.0) {
    return -i * z - std::numbers::ln2 + std::log(1.0 + std::exp(2.0 * i * z));
  }
  return i * z - std::numbers::ln2 + std::log(1.0 + std::exp(-2.0 * i * z));
}

void check_chi_domain(ComplexValue s, char const* where) {
  require_finite(s, where);
  if (s.imag() == 0.0) {
    double const sigma = s.real();
    bool const odd_integer =
        sigma == std::floor(sigma) && std::fmod(std::abs(sigma), 2.0) == 1.0;
    if (is_nonpositive_integer(sigma) || odd_integer) {
      throw DomainError(std::string(where) + ": singular point s = " +
                        std::to_string(sigma));
    }
  }
}

// Regularized-free pieces of Γ(a, x).
ComplexValue incomplete_gamma_continued_fraction(ComplexValue a,
                                                 ComplexValue x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  ComplexValue b = x + 1.0 - a;
  ComplexValue c = 1.0 / tiny;
  ComplexValue d = 1.0 / b;
  ComplexValue h = d;
  for (int i = 1; i <= kIncompleteGammaMaxIter; ++i) {
    ComplexValue const an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    ComplexValue const del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) {
      return std::exp(a * std::log(x) - x) * h;
    }
  }
  throw NonconvergenceError(
      "upper_incomplete_gamma: continued fraction did not converge");
}

// Lower incomplete gamma γ(a, x) by its power series.
ComplexValue incomplete_gamma_series(ComplexValue a, ComplexValue x) {
  constexpr double eps = 1e-17;
  ComplexValue term = 1.0 / a;
  ComplexValue sum = term;
  for (int n = 1; n <= kIncompleteGammaMaxIter; ++n) {
    term *= x / (a + static_cast<double>(n));
    sum += term;
    if (std::abs(term) < eps * std::abs(sum)) {
      return std::exp(a * std::log(x) - x) * sum;
    }
  }
  throw NonconvergenceError("upper_incomplete_gamma: series did not converge");
}

}  // namespace

double bernoulli_2k(int k) {
  if (k < 1 || k > kMaxBernoulliIndex) {
    throw DomainError("bernoulli_2k: index out of tabulated range");
  }
  return kBernoulli[k - 1];
}

ComplexValue log_gamma(ComplexValue s, EvalConfig const& cfg) {
  require_finite(s, "log_gamma");
  if (is_gamma_pole(s)) {
    throw PoleError("log_gamma: pole at s = " + std::to_string(s.real()));
  }
  ComplexValue shift_correction = 0.0;
  ComplexValue z = s;
  while (needs_shift(z, cfg)) {
    shift_correction += std::log(z);
    z += 1.0;
  }
  return stirling_log_gamma(z, cfg) - shift_correction;
}

ComplexValue digamma(ComplexValue s, EvalConfig const& cfg) {
  require_finite(s, "digamma");
  if (is_gamma_pole(s)) {
    throw PoleError("digamma: pole at s = " + std::to_string(s.real()));
  }
  ComplexValue shift_correction = 0.0;
  ComplexValue z = s;
  while (needs_shift(z, cfg)) {
    shift_correction += 1.0 / z;
    z += 1.0;
  }
  return asymptotic_digamma(z, cfg) - shift_correction;
}

double re_digamma(double sigma, double t, EvalConfig const& cfg) {
  return digamma({sigma, t}, cfg).real();
}

ComplexValue chi_factor_log(ComplexValue s, EvalConfig const& cfg) {
  check_chi_domain(s, "chi_factor");
  return (1.0 - s) * std::numbers::ln2 - s * std::log(pi) +
         log_cos(0.5 * pi * s) + log_gamma(s, cfg);
}

double chi_factor_log_modulus(ComplexValue s, EvalConfig const& cfg) {
  return chi_factor_log(s, cfg).real();
}

ComplexValue chi_factor(ComplexValue s, EvalConfig const& cfg) {
  return std::exp(chi_factor_log(s, cfg));
}

double h_value(ComplexValue s, EvalConfig const& cfg) {
  if (!(s.real() > 0.0)) {
    throw DomainError("h_value: requires sigma > 0");
  }
  return chi_factor_log_modulus(s, cfg);
}

ComplexValue zeta(ComplexValue s, EvalConfig const& cfg) {
  cfg.validate();
  require_finite(s, "zeta");
  if (s == ComplexValue{1.0, 0.0}) {
    throw PoleError("zeta: pole at s = 1");
  }
  int const m = cfg.em_correction_terms;
  double const sigma = s.real();
  if (sigma + 2.0 * m + 1.0 <= 0.0) {
    throw AccuracyError("zeta: sigma too negative for Euler-Maclaurin");
  }

  // Size of the first omitted correction, scaled by the usual remainder
  // factor |s + 2m + 1| / (σ + 2m + 1).
  auto remainder_estimate = [&](double n) {
    ComplexValue rising = s;
    for (int j = 1; j <= 2 * m; ++j) rising *= s + static_cast<double>(j);
    double const coeff =
        std::abs(kBernoulli[m]) / std::tgamma(2.0 * m + 3.0);
    double const n_power = std::pow(n, -sigma - 2.0 * m - 1.0);
    return coeff * std::abs(rising) * n_power *
           std::abs(s + 2.0 * m + 1.0) / (sigma + 2.0 * m + 1.0);
  };

  long long n = std::max<long long>(
      cfg.em_cutoff_n, static_cast<long long>(std::ceil(2.0 * std::abs(s.imag()))));
  constexpr long long kMaxCutoff = 1 << 22;
  while (remainder_estimate(static_cast<double>(n)) > cfg.target_abs_err) {
    if (n >= kMaxCutoff) {
      throw AccuracyError("zeta: target_abs_err not reachable");
    }
    n *= 2;
  }

  ComplexValue sum = 0.0;
  for (long long k = n - 1; k >= 1; --k) {
    sum += std::exp(-s * std::log(static_cast<double>(k)));
  }
  double const big_n = static_cast<double>(n);
  double const log_n = std::log(big_n);
  ComplexValue const n_pow = std::exp(-s * log_n);  // N^{-s}
  sum += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

  // Σ_k B_{2k}/(2k)! · s(s+1)...(s+2k-2) · N^{-s-2k+1}
  ComplexValue factor = s * n_pow / big_n;
  for (int k = 1; k <= m; ++k) {
    sum += kBernoulli[k - 1] / std::tgamma(2.0 * k + 1.0) * factor;
    factor *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) / (big_n * big_n);
  }
  return sum;
}

ComplexValue upper_incomplete_gamma(ComplexValue a, double x,
                                    EvalConfig const& cfg) {
  require_finite(x, "upper_incomplete_gamma");
  if (!(x > 0.0)) {
    throw DomainError("upper_incomplete_gamma: requires x > 0");
  }
  return upper_incomplete_gamma(a, ComplexValue{x, 0.0}, cfg);
}

ComplexValue upper_incomplete_gamma(ComplexValue a, ComplexValue x,
                                    EvalConfig const& cfg) {
  require_finite(a, "upper_incomplete_gamma");
  require_finite(x, "upper_incomplete_gamma");
  if (!(x.real() > 0.0)) {
    throw DomainError("upper_incomplete_gamma: requires Re x > 0");
  }
  if (std::abs(x) >= std::abs(a) + 1.0 || is_gamma_pole(a)) {
    return incomplete_gamma_continued_fraction(a, x);
  }
  return std::exp(log_gamma(a, cfg)) - incomplete_gamma_series(a, x);
}

}  // namespace specfun
}  // namespace zsym
