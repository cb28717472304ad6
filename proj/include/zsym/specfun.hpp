#pragma once

#include "zsym/types.hpp"

// Complex special functions on double precision: log-gamma, digamma, the
// incomplete gamma function, the chi factor of the zeta functional equation
// and zeta itself. Every function is pure and thread-safe.
namespace zsym::specfun {

// Principal branch of log Γ(s). Upward recurrence until |s| reaches
// cfg.stirling_shift_min_modulus, then the Stirling series.
ComplexValue log_gamma(ComplexValue s, EvalConfig const& cfg = {});

// Complex digamma ψ(s) by the same shift-then-asymptotic scheme.
ComplexValue digamma(ComplexValue s, EvalConfig const& cfg = {});

// Re ψ(σ + it) = ∂/∂σ log|Γ(σ + it)|.
double re_digamma(double sigma, double t, EvalConfig const& cfg = {});

// log g(s) where g(s) = 2^{1-s} π^{-s} cos(sπ/2) Γ(s) is the factor in
// ζ(1-s) = g(s) ζ(s). The imaginary part is some branch of arg g and
// carries no cross-call contract; use chi_factor_log_modulus for |g|.
ComplexValue chi_factor_log(ComplexValue s, EvalConfig const& cfg = {});

// log|g(s)|, evaluated in log space so that |t| up to 1e6 cannot overflow.
double chi_factor_log_modulus(ComplexValue s, EvalConfig const& cfg = {});

// g(s) itself. Only sensible for moderate |t|.
ComplexValue chi_factor(ComplexValue s, EvalConfig const& cfg = {});

// h(s) = log|g(s) / g(1/2 + it)|. Since |g(1/2 + it)| = 1 this is
// log|g(s)|; h(s) > 0 is equivalent to |ζ(1-s)| > |ζ(s)| away from zeros.
double h_value(ComplexValue s, EvalConfig const& cfg = {});

// ζ(s) by Euler-Maclaurin summation with Bernoulli corrections.
ComplexValue zeta(ComplexValue s, EvalConfig const& cfg = {});

// Upper incomplete gamma Γ(a, x) = ∫_x^∞ u^{a-1} e^{-u} du.
ComplexValue upper_incomplete_gamma(ComplexValue a, double x,
                                    EvalConfig const& cfg = {});

// Same with a complex lower limit, Re x > 0; the path runs from x to +∞
// along a ray. Used with rotated arguments by the Δ L-function.
ComplexValue upper_incomplete_gamma(ComplexValue a, ComplexValue x,
                                    EvalConfig const& cfg = {});

// Even-index Bernoulli numbers B_2, B_4, ..., B_32.
double bernoulli_2k(int k);

}  // namespace zsym::specfun
