#pragma once

#include <cmath>
#include <complex>

#include "zsym/error.hpp"

namespace zsym {

// s = σ + it, with σ = real() and t = imag().
using ComplexValue = std::complex<double>;

inline bool is_finite(ComplexValue const& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(ComplexValue const& z, char const* where) {
  if (!is_finite(z)) {
    throw NonfiniteError(std::string(where) + ": nonfinite argument");
  }
}

inline void require_finite(double x, char const* where) {
  if (!std::isfinite(x)) {
    throw NonfiniteError(std::string(where) + ": nonfinite argument");
  }
}

// Precision and truncation knobs shared by all evaluators. Immutable once
// validated; pass by const reference.
struct EvalConfig {
  double target_abs_err = 1e-12;
  int em_cutoff_n = 20;
  int em_correction_terms = 8;
  double stirling_shift_min_modulus = 10.0;
  int series_nmax = 64;

  // Throws DomainError if any invariant is violated.
  void validate() const;

  // Default configuration with a different target error.
  static EvalConfig with_precision(double target_abs_err);
};

}  // namespace zsym
