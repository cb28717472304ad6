#include "zsym/tau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "zsym/specfun.hpp"

namespace zsym::tau {
namespace detail {

Int128 checked_mul(Int128 a, Int128 b, long long index) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("128-bit overflow at n = " + std::to_string(index),
                        index);
  }
  return out;
}

Int128 checked_add(Int128 a, Int128 b, long long index) {
  Int128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("128-bit overflow at n = " + std::to_string(index),
                        index);
  }
  return out;
}

}  // namespace detail

namespace {

using detail::checked_add;
using detail::checked_mul;
using std::numbers::pi;

// Power series product truncated at degree n_max. Overflow reports the
// τ index (degree + 1) that was being formed.
std::vector<Int128> truncated_product(std::vector<Int128> const& a,
                                      std::vector<Int128> const& b) {
  std::size_t const size = a.size();
  std::vector<Int128> c(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < size; ++j) {
      if (b[j] == 0) continue;
      auto const index = static_cast<long long>(i + j + 1);
      c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j], index), index);
    }
  }
  return c;
}

// Angle of the rotated splitting point for a given ordinate. The residual
// cancellation is bounded by e^{kRotationSlack}.
constexpr double kRotationSlack = 6.0;

double rotation_angle(double t) {
  double const theta = std::min(pi / 2.0, kRotationSlack / std::abs(t));
  return std::copysign(pi / 2.0 - theta, t);
}

ComplexValue lambda_sum(ComplexValue s, TauTable const& table,
                        EvalConfig const& cfg, double phi) {
  cfg.validate();
  require_finite(s, "lambda_completed");
  ComplexValue const rotation = std::polar(1.0, phi);
  ComplexValue const rotation_conj = std::conj(rotation);
  ComplexValue const reflected = 12.0 - s;

  // Terms behave like n^{c} e^{-2π n cos φ}; past their peak, two
  // consecutive negligible terms end the sum.
  double const decay = 2.0 * pi * std::cos(phi);
  double const peak = (12.0 + std::abs(s.real() - 6.0)) / decay;
  double const natural_scale = std::exp(-std::abs(s.imag() * phi));
  double const tol = 0.01 * cfg.target_abs_err;

  ComplexValue sum = 0.0;
  int small_run = 0;
  for (int n = 1; n <= table.n_max(); ++n) {
    double const x = 2.0 * pi * n;
    double const log_x = std::log(x);
    ComplexValue const upper =
        std::exp(-s * log_x) *
        specfun::upper_incomplete_gamma(s, x * rotation, cfg);
    ComplexValue const lower =
        std::exp(-reflected * log_x) *
        specfun::upper_incomplete_gamma(reflected, x * rotation_conj, cfg);
    ComplexValue const term = table.as_double(n) * (upper + lower);
    sum += term;
    double const scale = std::max(std::abs(sum), natural_scale);
    if (n >= peak && std::abs(term) <= tol * scale) {
      if (++small_run == 2) return sum;
    } else {
      small_run = 0;
    }
  }
  throw AccuracyError("lambda_completed: tau table (n_max = " +
                      std::to_string(table.n_max()) +
                      ") too short for requested accuracy");
}

}  // namespace

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  bool const negative = value < 0;
  // Work with negative magnitudes so that the minimum value is safe.
  std::string digits;
  Int128 v = negative ? value : -value;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

TauTable::TauTable(int n_max, std::vector<Int128> coeffs)
    : n_max_(n_max), coeffs_(std::move(coeffs)) {
  if (n_max_ < 1 || coeffs_.size() != static_cast<std::size_t>(n_max_) + 1) {
    throw DomainError("TauTable: coefficient count does not match n_max");
  }
}

Int128 TauTable::operator()(int n) const {
  if (n < 1 || n > n_max_) {
    throw DomainError("TauTable: index " + std::to_string(n) +
                      " outside [1, " + std::to_string(n_max_) + "]");
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> euler_coeffs(int n_max) {
  if (n_max < 1) throw DomainError("euler_coeffs: n_max must be >= 1");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n_max) + 1, 0);
  coeffs[0] = 1;
  // Generalized pentagonal numbers k(3k-1)/2 for k = ±1, ±2, ...
  for (long long k = 1;; ++k) {
    long long const plus = k * (3 * k - 1) / 2;
    long long const minus = k * (3 * k + 1) / 2;
    if (plus > n_max) break;
    std::int64_t const sign = (k % 2 == 0) ? 1 : -1;
    coeffs[static_cast<std::size_t>(plus)] = sign;
    if (minus <= n_max) coeffs[static_cast<std::size_t>(minus)] = sign;
  }
  return coeffs;
}

TauTable tau_table(int n_max) {
  if (n_max < 1) throw DomainError("tau_table: n_max must be >= 1");
  // Δ = q E^24; need E^24 through degree n_max - 1.
  auto const euler = euler_coeffs(n_max);
  std::vector<Int128> base(static_cast<std::size_t>(n_max), 0);
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = euler[i];

  std::vector<Int128> result(base.size(), 0);
  result[0] = 1;
  unsigned exponent = 24;
  while (true) {
    if (exponent & 1u) result = truncated_product(result, base);
    exponent >>= 1u;
    if (exponent == 0) break;
    base = truncated_product(base, base);
  }

  std::vector<Int128> coeffs(static_cast<std::size_t>(n_max) + 1, 0);
  std::copy(result.begin(), result.end(), coeffs.begin() + 1);
  return TauTable(n_max, std::move(coeffs));
}

int divisor_count(int n) {
  if (n < 1) throw DomainError("divisor_count: n must be >= 1");
  int count = 0;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return count;
}

TableCheck check_multiplicativity(TauTable const& table) {
  int const n_max = table.n_max();
  for (int m = 2; m <= n_max; ++m) {
    for (int k = m + 1; static_cast<long long>(m) * k <= n_max; ++k) {
      if (std::gcd(m, k) != 1) continue;
      int const mk = m * k;
      if (table(mk) != checked_mul(table(m), table(k), mk)) {
        return {false, "tau(" + std::to_string(mk) + ") != tau(" +
                           std::to_string(m) + ") * tau(" +
                           std::to_string(k) + ")"};
      }
    }
  }
  return {};
}

TableCheck check_hecke(TauTable const& table) {
  int const n_max = table.n_max();
  for (int p = 2; static_cast<long long>(p) * p <= n_max; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    Int128 p11 = 1;
    for (int i = 0; i < 11; ++i) p11 = checked_mul(p11, p, p);
    // pk = p^k, k >= 1, while p^{k+1} <= n_max.
    for (long long pk = p; pk * p <= n_max; pk *= p) {
      auto const next = static_cast<int>(pk * p);
      auto const prev = static_cast<int>(pk / p);
      Int128 const prev_tau = prev == 1 ? Int128{1} : table(prev);
      Int128 const expected = checked_add(
          checked_mul(table(p), table(static_cast<int>(pk)), next),
          -checked_mul(p11, prev_tau, next), next);
      if (table(next) != expected) {
        return {false, "Hecke recurrence fails at n = " + std::to_string(next)};
      }
    }
  }
  return {};
}

TableCheck check_deligne(TauTable const& table) {
  for (int n = 1; n <= table.n_max(); ++n) {
    long double const magnitude = std::fabs(static_cast<long double>(table(n)));
    long double const bound =
        divisor_count(n) * std::pow(static_cast<long double>(n), 5.5L);
    if (magnitude > bound) {
      return {false, "|tau(n)| > d(n) n^{11/2} at n = " + std::to_string(n)};
    }
  }
  return {};
}

PartialSum f_partial(ComplexValue s, TauTable const& table, int n_terms) {
  require_finite(s, "f_partial");
  if (!(s.real() > 6.5)) {
    throw DomainError("f_partial: requires sigma > 13/2");
  }
  if (n_terms < 1 || n_terms > table.n_max()) {
    throw DomainError("f_partial: N must lie in [1, n_max]");
  }
  ComplexValue sum = 0.0;
  for (int n = n_terms; n >= 1; --n) {
    sum += table.as_double(n) * std::exp(-s * std::log(static_cast<double>(n)));
  }
  // Σ_{n>N} d(n) n^{-α}, α = σ - 11/2, by partial summation against
  // Σ_{n<=x} d(n) <= x log x + x.
  double const alpha = s.real() - 5.5;
  double const big_n = n_terms;
  double const beta = alpha - 1.0;
  double const tail = alpha * std::pow(big_n, -beta) *
                      ((std::log(big_n) + 1.0) / beta + 1.0 / (beta * beta));
  return {sum, tail};
}

ComplexValue lambda_completed(ComplexValue s, TauTable const& table,
                              EvalConfig const& cfg) {
  return lambda_sum(s, table, cfg, s.imag() == 0.0 ? 0.0 : rotation_angle(s.imag()));
}

ComplexValue lambda_completed_unrotated(ComplexValue s, TauTable const& table,
                                        EvalConfig const& cfg) {
  return lambda_sum(s, table, cfg, 0.0);
}

ComplexValue f_value(ComplexValue s, TauTable const& table,
                     EvalConfig const& cfg) {
  // log_gamma raises PoleError at the poles of Γ.
  ComplexValue const log_gamma = specfun::log_gamma(s, cfg);
  ComplexValue const lambda = lambda_completed(s, table, cfg);
  return lambda * std::exp(s * std::log(2.0 * pi) - log_gamma);
}

}  // namespace zsym::tau
