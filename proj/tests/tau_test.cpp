#include "zsym/tau.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "zsym/specfun.hpp"

namespace zsym::tau {
namespace {

using std::numbers::pi;

EvalConfig const kCfg{};

TauTable const& shared_table() {
  static TauTable const table = tau_table(5000);
  return table;
}

TEST(EulerCoeffsTest, PentagonalExponents) {
  EXPECT_EQ(euler_coeffs(5), (std::vector<std::int64_t>{1, -1, -1, 0, 0, 1}));
  auto const longer = euler_coeffs(12);
  EXPECT_EQ(longer[7], 1);
  EXPECT_EQ(longer[6], 0);
  EXPECT_EQ(longer[12], -1);
  EXPECT_THROW(euler_coeffs(0), DomainError);
}

TEST(TauTableTest, LeadingValues) {
  auto const& table = shared_table();
  EXPECT_TRUE(table(1) == 1);
  EXPECT_TRUE(table(2) == -24);
  EXPECT_TRUE(table(3) == 252);
  EXPECT_TRUE(table(6) == table(2) * table(3));
  EXPECT_EQ(to_string(table(10)), "-115920");
}

TEST(TauTableTest, MatchesEtaProductExpansion) {
  auto const oracle = testing::tau_by_eta_product(40);
  auto const& table = shared_table();
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(static_cast<long double>(table(n)), oracle[n]) << n;
  }
}

TEST(TauTableTest, IdentitiesHold) {
  auto const table = tau_table(3000);
  auto const mult = check_multiplicativity(table);
  EXPECT_TRUE(mult.ok) << mult.detail;
  auto const hecke = check_hecke(table);
  EXPECT_TRUE(hecke.ok) << hecke.detail;
  auto const deligne = check_deligne(table);
  EXPECT_TRUE(deligne.ok) << deligne.detail;
}

TEST(TauTableTest, CorruptedTableFailsChecks) {
  auto const good = tau_table(200);
  std::vector<Int128> coeffs(201, 0);
  for (int n = 1; n <= 200; ++n) coeffs[n] = good(n);
  coeffs[12] += 1;
  TauTable const bad(200, coeffs);
  EXPECT_FALSE(check_multiplicativity(bad).ok);
  coeffs[12] -= 1;
  coeffs[8] += 1;
  TauTable const bad_power(200, coeffs);
  EXPECT_FALSE(check_hecke(bad_power).ok);
  coeffs[8] -= 1;
  coeffs[2] = static_cast<Int128>(1e18);
  TauTable const too_big(200, coeffs);
  EXPECT_FALSE(check_deligne(too_big).ok);
}

TEST(TauTableTest, IndexAndSizeErrors) {
  auto const& table = shared_table();
  EXPECT_THROW(table(0), DomainError);
  EXPECT_THROW(table(5001), DomainError);
  EXPECT_THROW(tau_table(0), DomainError);
  EXPECT_THROW(TauTable(3, std::vector<Int128>(2, 0)), DomainError);
}

TEST(Int128Test, OverflowIsDetected) {
  Int128 const big = static_cast<Int128>(1) << 100;
  EXPECT_THROW(detail::checked_mul(big, big, 42), OverflowError);
  try {
    detail::checked_add(std::numeric_limits<Int128>::max(), 1, 7);
    FAIL();
  } catch (OverflowError const& e) {
    EXPECT_EQ(e.index(), 7);
  }
  EXPECT_TRUE(detail::checked_mul(big, 4, 1) == (static_cast<Int128>(1) << 102));
}

TEST(Int128Test, ToString) {
  EXPECT_EQ(to_string(0), "0");
  EXPECT_EQ(to_string(-24), "-24");
  EXPECT_EQ(to_string(std::numeric_limits<Int128>::min()),
            "-170141183460469231731687303715884105728");
  EXPECT_EQ(to_string(std::numeric_limits<Int128>::max()),
            "170141183460469231731687303715884105727");
}

TEST(DivisorCountTest, SmallValues) {
  EXPECT_EQ(divisor_count(1), 1);
  EXPECT_EQ(divisor_count(12), 6);
  EXPECT_EQ(divisor_count(49), 3);
  EXPECT_EQ(divisor_count(97), 2);
}

TEST(FPartialTest, SingleTerm) {
  auto const [value, tail] = f_partial(8.0, shared_table(), 1);
  EXPECT_EQ(value, ComplexValue(1.0, 0.0));
  EXPECT_GT(tail, 0.0);
}

TEST(FPartialTest, StabilizesWithinTailBound) {
  auto const& table = shared_table();
  auto const full = f_partial(7.0, table, 5000);
  auto const half = f_partial(7.0, table, 2500);
  EXPECT_LT(std::abs(full.value - half.value), half.tail_bound);
}

TEST(FPartialTest, TailBoundDecreasesInN) {
  auto const& table = shared_table();
  double previous = INFINITY;
  for (int n : {1, 2, 5, 10, 100, 1000, 5000}) {
    double const tail = f_partial(6.9, table, n).tail_bound;
    EXPECT_LT(tail, previous) << n;
    previous = tail;
  }
}

TEST(FPartialTest, Domain) {
  auto const& table = shared_table();
  EXPECT_THROW(f_partial(6.5, table, 10), DomainError);
  EXPECT_THROW(f_partial(8.0, table, 0), DomainError);
  EXPECT_THROW(f_partial(8.0, table, 5001), DomainError);
}

TEST(LambdaTest, FunctionalEquation) {
  auto const& table = shared_table();
  ComplexValue const s{6.3, 4.0};
  ComplexValue const a = lambda_completed(s, table, kCfg);
  ComplexValue const b = lambda_completed(12.0 - s, table, kCfg);
  EXPECT_LE(std::abs(a - b), 1e-10 * std::abs(a));
}

TEST(LambdaTest, RealOnSymmetryLine) {
  for (double t : {0.0, 4.0, 9.0, 15.0}) {
    ComplexValue const value = lambda_completed({6.0, t}, shared_table(), kCfg);
    EXPECT_LT(std::abs(value.imag()), 1e-10 * std::abs(value)) << t;
  }
}

TEST(LambdaTest, GoldenAtEight) {
  // ∫_0^∞ Δ(iy) y^7 dy, 30-digit quadrature done once offline.
  ComplexValue const value = lambda_completed(8.0, shared_table(), kCfg);
  EXPECT_NEAR(value.real(), 0.0019310992004937840076, 1e-15);
  EXPECT_NEAR(value.imag(), 0.0, 1e-16);
}

TEST(LambdaTest, MellinQuadratureOracle) {
  // Direct quadrature of ∫ Δ(iy) y^{s-1} dy. For y < 1 use Δ(i/u) = u^12 Δ(iu)
  // so the q-series stays short.
  auto const& table = shared_table();
  auto delta = [&table](double y) {
    double sum = 0.0;
    for (int n = 1; n <= 60; ++n) {
      sum += table.as_double(n) * std::exp(-2.0 * pi * n * y);
    }
    return sum;
  };
  ComplexValue const s{6.7, 2.5};
  auto integrand = [&](double y) {
    return delta(y) * (std::exp((s - 1.0) * std::log(y)) +
                       std::exp((11.0 - s) * std::log(y)));
  };
  ComplexValue const quad = testing::integrate_complex(integrand, 1.0, 40.0, 1e-15);
  ComplexValue const value = lambda_completed(s, table, kCfg);
  EXPECT_NEAR(std::abs(value - quad), 0.0, 1e-12 * std::abs(value) + 1e-15);
}

TEST(LambdaTest, RotatedAgreesWithUnrotatedAtSmallT) {
  auto const& table = shared_table();
  for (double t : {0.5, 2.0, 5.0}) {
    ComplexValue const s{6.2, t};
    ComplexValue const rotated = lambda_completed(s, table, kCfg);
    ComplexValue const plain = lambda_completed_unrotated(s, table, kCfg);
    EXPECT_LE(std::abs(rotated - plain), 1e-9 * std::abs(rotated)) << t;
  }
}

TEST(LambdaTest, ShortTableIsAnAccuracyError) {
  auto const tiny = tau_table(8);
  EXPECT_THROW(lambda_completed({6.2, 30.0}, tiny, kCfg), AccuracyError);
}

TEST(FValueTest, AgreesWithPartialSum) {
  auto const& table = shared_table();
  auto const partial = f_partial(8.0, table, 5000);
  ComplexValue const value = f_value(8.0, table, kCfg);
  EXPECT_LE(std::abs(value - partial.value), partial.tail_bound + 1e-9);
}

TEST(FValueTest, AgreesWithPartialSumsAcrossHalfPlane) {
  auto const& table = shared_table();
  for (double sigma = 7.0; sigma <= 9.0; sigma += 0.5) {
    for (double t = 0.0; t <= 10.0; t += 2.5) {
      ComplexValue const s{sigma, t};
      auto const partial = f_partial(s, table, 5000);
      EXPECT_LE(std::abs(f_value(s, table, kCfg) - partial.value),
                partial.tail_bound + 1e-9)
          << s;
    }
  }
}

TEST(FValueTest, GoldenValuesInsideStrip) {
  // 60-digit unrotated evaluation done once offline.
  struct Case {
    ComplexValue s;
    ComplexValue expected;
  };
  Case const cases[] = {
      {{6.2, 15.0}, {1.3916254555475309328, 0.66912770375808438485}},
      {{6.05, 20.0}, {0.14186594858841501768, 0.69400687752903776703}},
      {{5.95, -20.0}, {-0.071782750199839760828, -0.7949763132888074626}},
  };
  for (auto const& c : cases) {
    ComplexValue const value = f_value(c.s, shared_table(), kCfg);
    EXPECT_LE(std::abs(value - c.expected), 1e-10 * std::abs(c.expected))
        << c.s;
  }
}

TEST(FValueTest, SymmetryCenterHasEqualModuli) {
  auto const& table = shared_table();
  for (double t : {1.0, 4.0, 10.0}) {
    ComplexValue const s{6.0, t};
    double const a = std::abs(f_value(s, table, kCfg));
    double const b = std::abs(f_value(12.0 - s, table, kCfg));
    EXPECT_NEAR(a, b, 1e-10 * a) << t;
  }
}

TEST(FValueTest, StrictInequalityInsideRegion) {
  auto const& table = shared_table();
  ComplexValue const s{6.4, 10.0};
  EXPECT_GT(std::abs(f_value(12.0 - s, table, kCfg)),
            std::abs(f_value(s, table, kCfg)));
}

TEST(FValueTest, PolesOfGamma) {
  EXPECT_THROW(f_value(0.0, shared_table(), kCfg), PoleError);
  EXPECT_THROW(f_value(-2.0, shared_table(), kCfg), PoleError);
}

}  // namespace
}  // namespace zsym::tau
