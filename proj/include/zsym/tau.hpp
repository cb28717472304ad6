#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsym/types.hpp"

// Ramanujan τ(n) as exact integers and the L-function
// F(s) = Σ τ(n) n^{-s} of the weight-12 cusp form Δ.
namespace zsym::tau {

using Int128 = __int128;

std::string to_string(Int128 value);

namespace detail {
// Overflow-checked arithmetic; OverflowError carries `index`.
Int128 checked_mul(Int128 a, Int128 b, long long index);
Int128 checked_add(Int128 a, Int128 b, long long index);
}  // namespace detail

// Exact coefficients of Δ = q ∏(1 - q^n)^24.
class TauTable {
 public:
  TauTable(int n_max, std::vector<Int128> coeffs);

  int n_max() const { return n_max_; }
  // τ(n) for 1 <= n <= n_max.
  Int128 operator()(int n) const;
  double as_double(int n) const { return static_cast<double>((*this)(n)); }

 private:
  int n_max_;
  std::vector<Int128> coeffs_;  // coeffs_[0] unused
};

// Coefficients of ∏_{n>=1}(1 - q^n) in degrees 0..n_max (pentagonal
// number theorem).
std::vector<std::int64_t> euler_coeffs(int n_max);

// Throws OverflowError if an intermediate leaves the 128-bit range.
TauTable tau_table(int n_max);

int divisor_count(int n);

// Outcome of an exhaustive identity check over a table. On failure,
// detail names the first offending index.
struct TableCheck {
  bool ok = true;
  std::string detail;
};

// τ(mn) = τ(m)τ(n) for every coprime m, n with mn <= n_max.
TableCheck check_multiplicativity(TauTable const& table);
// τ(p^{k+1}) = τ(p)τ(p^k) - p^11 τ(p^{k-1}).
TableCheck check_hecke(TauTable const& table);
// |τ(n)| <= d(n) n^{11/2}.
TableCheck check_deligne(TauTable const& table);

struct PartialSum {
  ComplexValue value;
  // Bound on |Σ_{n>N} τ(n) n^{-s}| from |τ(n)| <= d(n) n^{11/2}.
  double tail_bound;
};

// Σ_{n<=N} τ(n) n^{-s}. Requires σ > 13/2 and N <= table.n_max().
PartialSum f_partial(ComplexValue s, TauTable const& table, int n_terms);

// Completed function Λ(s) = (2π)^{-s} Γ(s) F(s), entire with
// Λ(s) = Λ(12 - s). Evaluated by splitting the Mellin integral of Δ and
// rotating the splitting point toward the imaginary axis by an angle that
// grows with |t|, which keeps the terms at the natural size e^{-π|t|/2}.
// The table must be long enough for the rotated series to converge;
// AccuracyError otherwise.
ComplexValue lambda_completed(ComplexValue s, TauTable const& table,
                              EvalConfig const& cfg = {});

// Same, with the splitting point pinned at y = 1 (no rotation). Loses
// roughly π|t|/(2 ln 10) digits to cancellation; kept for cross-checks at
// small |t|.
ComplexValue lambda_completed_unrotated(ComplexValue s, TauTable const& table,
                                        EvalConfig const& cfg = {});

// F(s) = Λ(s) (2π)^s / Γ(s), valid on all of ℂ except the poles of Γ.
ComplexValue f_value(ComplexValue s, TauTable const& table,
                     EvalConfig const& cfg = {});

}  // namespace zsym::tau
