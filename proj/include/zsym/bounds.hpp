#pragma once

// Closed-form lower bounds for Re ψ(σ + it) and the threshold functions G
// and H whose positivity certifies the zeta and τ symmetry inequalities.
// All functions are elementary and evaluated in double precision.
namespace zsym::bounds {

// (σ, t) with t > 0 and σ >= 1/2.
struct BoundPoint {
  double sigma;
  double t;
};

// Periodic Bernoulli-type polynomial x(2x² - 3x + 1)/12 on [0, 1].
double p3(double x);

// Location and value of the maximum of p3 on [0, 1].
double p3_argmax();
double p3_max();

// ∫_0^∞ dx / ((a + x)² + t²)², in closed form.
double integral_tail(double a, double t);

// First three terms of the Stirling lower bound:
// ½ log(σ² + t²) - σ / (2(σ² + t²)) - (σ² - t²) / (12(σ² + t²)²).
double J(double sigma, double t);

// ∂J/∂σ, nonnegative for σ >= ½.
double dJ_dsigma(double sigma, double t);

// J(σ, t) - (√3/36) ∫_0^∞ dx/((σ + x)² + t²)², a lower bound for
// Re ψ(σ + it) when σ >= ½.
double lower_bound_re_digamma(double sigma, double t);
inline double lower_bound_re_digamma(BoundPoint p) {
  return lower_bound_re_digamma(p.sigma, p.t);
}

// Worst case over σ > ½ of the bound on h(s)/(σ - ½):
// J(½, t) - (√3/36) I(½, t) - 2π e^{-πt} - log 2π.
double G(double t);

// Sufficient quantity for the τ inequality, with the worst case
// σ₁ = 11/2: J(11/2, t) - (√3/36) I(11/2, t) - log 2π.
double H(double t);

}  // namespace zsym::bounds
