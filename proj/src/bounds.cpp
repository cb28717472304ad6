#include "zsym/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zsym/error.hpp"

namespace zsym::bounds {
namespace {

using std::numbers::pi;

constexpr double kStirlingRemainder = std::numbers::sqrt3 / 36.0;

void require_positive_t(double t, char const* where) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(where) + ": requires finite t > 0");
  }
}

}  // namespace

double p3(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("p3: x must lie in [0, 1]");
  }
  return x * (2.0 * x * x - 3.0 * x + 1.0) / 12.0;
}

double p3_argmax() { return (3.0 - std::numbers::sqrt3) / 6.0; }

double p3_max() { return std::numbers::sqrt3 / 216.0; }

double integral_tail(double a, double t) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("integral_tail: requires a > 0");
  }
  require_positive_t(t, "integral_tail");
  double const t2 = t * t;
  return std::atan2(t, a) / (2.0 * t2 * t) - a / (2.0 * t2 * (a * a + t2));
}

double J(double sigma, double t) {
  double const r2 = sigma * sigma + t * t;
  if (r2 == 0.0) throw DomainError("J: (sigma, t) = (0, 0)");
  return 0.5 * std::log(r2) - sigma / (2.0 * r2) -
         (sigma * sigma - t * t) / (12.0 * r2 * r2);
}

double dJ_dsigma(double sigma, double t) {
  double const s2 = sigma * sigma;
  double const t2 = t * t;
  double const r2 = s2 + t2;
  if (r2 == 0.0) throw DomainError("dJ_dsigma: (sigma, t) = (0, 0)");
  double const numerator =
      s2 * sigma * (1.0 + 3.0 * sigma + 6.0 * s2) +
      3.0 * t2 * (sigma - 0.5) * (2.0 * t2 + 4.0 * sigma * (sigma + 0.5));
  return numerator / (6.0 * r2 * r2 * r2);
}

double lower_bound_re_digamma(double sigma, double t) {
  if (!(sigma >= 0.5)) {
    throw DomainError("lower_bound_re_digamma: requires sigma >= 1/2");
  }
  require_positive_t(t, "lower_bound_re_digamma");
  return J(sigma, t) - kStirlingRemainder * integral_tail(sigma, t);
}

double G(double t) {
  require_positive_t(t, "G");
  return lower_bound_re_digamma(0.5, t) - 2.0 * pi * std::exp(-pi * t) -
         std::log(2.0 * pi);
}

double H(double t) {
  require_positive_t(t, "H");
  return lower_bound_re_digamma(5.5, t) - std::log(2.0 * pi);
}

}  // namespace zsym::bounds
