#include "zsym/bounds.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "zsym/error.hpp"
#include "zsym/specfun.hpp"

namespace zsym::bounds {
namespace {

using std::numbers::pi;

double const kLog2Pi = std::log(2.0 * pi);

TEST(P3Test, Endpoints) {
  EXPECT_EQ(p3(0.0), 0.0);
  EXPECT_EQ(p3(1.0), 0.0);
  EXPECT_THROW(p3(-0.01), DomainError);
  EXPECT_THROW(p3(1.01), DomainError);
}

TEST(P3Test, MaximumByCalculus) {
  double const x = p3_argmax();
  // P3'(x) = (6x² - 6x + 1)/12 vanishes at the maximiser.
  EXPECT_NEAR((6.0 * x * x - 6.0 * x + 1.0) / 12.0, 0.0, 1e-16);
  EXPECT_NEAR(p3(x), std::numbers::sqrt3 / 216.0, 1e-14);
  EXPECT_EQ(p3_max(), std::numbers::sqrt3 / 216.0);
}

TEST(P3Test, MaximumByBruteForce) {
  double best = -INFINITY;
  constexpr int kSamples = 1000000;
  for (int i = 0; i <= kSamples; ++i) {
    best = std::max(best, p3(static_cast<double>(i) / kSamples));
  }
  EXPECT_LE(best, p3_max() + 1e-16);
  EXPECT_NEAR(best, p3_max(), 1e-12);
}

TEST(IntegralTailTest, HalfSpecialisation) {
  double const t = 7.0;
  double const displayed =
      (std::atan(2.0 * t) - 2.0 * t / (4.0 * t * t + 1.0)) / (2.0 * t * t * t);
  EXPECT_NEAR(integral_tail(0.5, t), displayed, 1e-16);
}

TEST(IntegralTailTest, ElevenHalvesSpecialisation) {
  double const t = 3.8085;
  // √3(atan(2t/11) - 22t/(121 + 4t²))/(72t³) = (√3/36) I(11/2, t)
  double const displayed =
      std::numbers::sqrt3 *
      (std::atan(2.0 * t / 11.0) - 22.0 * t / (121.0 + 4.0 * t * t)) /
      (72.0 * t * t * t);
  EXPECT_NEAR(std::numbers::sqrt3 / 36.0 * integral_tail(5.5, t), displayed,
              1e-16);
}

TEST(IntegralTailTest, MatchesQuadrature) {
  for (double a : {0.5, 5.5}) {
    for (double t : {1.0, 3.8, 6.3, 20.0}) {
      auto integrand = [a, t](double x) {
        double const q = (a + x) * (a + x) + t * t;
        return 1.0 / (q * q);
      };
      double const exact = integral_tail(a, t);
      double const quad = testing::integrate_to_infinity(integrand, 0.0, 1e-16 * exact);
      EXPECT_NEAR(exact, quad, 1e-10 * exact) << a << " " << t;
    }
  }
}

TEST(IntegralTailTest, DecreasingInA) {
  double previous = INFINITY;
  for (double a : {0.5, 1.0, 2.0, 5.5}) {
    double const value = integral_tail(a, 5.0);
    EXPECT_LT(value, previous) << a;
    previous = value;
  }
}

TEST(IntegralTailTest, Domain) {
  EXPECT_THROW(integral_tail(0.0, 1.0), DomainError);
  EXPECT_THROW(integral_tail(1.0, 0.0), DomainError);
  EXPECT_THROW(integral_tail(1.0, -2.0), DomainError);
}

TEST(JTest, Values) {
  EXPECT_NEAR(J(0.0, 1.0), 1.0 / 12.0, 1e-16);
  // 40-digit direct evaluation.
  EXPECT_NEAR(J(0.5, 6.29073), 1.8380144527601213371, 1e-15);
  double const margin = J(5.5, 3.8085) - kLog2Pi;
  EXPECT_GT(margin, 0.0);
  EXPECT_NEAR(margin, 6.196795936829300853e-4, 1e-14);
  EXPECT_THROW(J(0.0, 0.0), DomainError);
}

TEST(DJDSigmaTest, HalfClosedForm) {
  double const t = 5.0;
  double const r2 = 0.25 + t * t;
  double const expected = 0.125 * (1.0 + 1.5 + 1.5) / (6.0 * r2 * r2 * r2);
  EXPECT_NEAR(dJ_dsigma(0.5, t), expected, 1e-18);
  EXPECT_GT(dJ_dsigma(0.5, t), 0.0);
}

TEST(DJDSigmaTest, FiniteDifference) {
  double const fd = testing::central_difference(
      [](double s) { return J(s, 10.0); }, 2.0, 1e-5);
  EXPECT_NEAR(dJ_dsigma(2.0, 10.0), fd, 1e-8);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sigma(0.5, 10.0);
  std::uniform_real_distribution<double> t(0.1, 50.0);
  for (int i = 0; i < 1000; ++i) {
    double const s = sigma(rng);
    double const tt = t(rng);
    double const numeric = testing::central_difference(
        [tt](double x) { return J(x, tt); }, s, 1e-5);
    EXPECT_NEAR(dJ_dsigma(s, tt), numeric, 1e-7) << s << " " << tt;
  }
}

TEST(DJDSigmaTest, NonnegativeAndJMonotone) {
  for (double s = 0.5; s <= 10.0; s += 0.25) {
    for (double t = 0.1; t <= 50.0; t += 0.7) {
      EXPECT_GE(dJ_dsigma(s, t), 0.0) << s << " " << t;
      EXPECT_GE(J(s, t), J(0.5, t)) << s << " " << t;
    }
  }
}

TEST(LowerBoundTest, DominatedByDigamma) {
  EXPECT_LE(lower_bound_re_digamma(0.5, 10.0), specfun::re_digamma(0.5, 10.0));
  EXPECT_LE(lower_bound_re_digamma(3.0, 3.0), specfun::re_digamma(3.0, 3.0));
  EXPECT_LE(lower_bound_re_digamma(BoundPoint{1.0, 2.0}),
            specfun::re_digamma(1.0, 2.0));
}

TEST(LowerBoundTest, GapGolden) {
  double const gap =
      specfun::re_digamma(0.5, 6.29) - lower_bound_re_digamma(0.5, 6.29);
  EXPECT_GT(gap, 0.0);
  EXPECT_NEAR(gap, 1.415914784292964554e-4, 1e-12);
}

TEST(LowerBoundTest, Domain) {
  EXPECT_THROW(lower_bound_re_digamma(0.49, 5.0), DomainError);
  EXPECT_THROW(lower_bound_re_digamma(0.5, 0.0), DomainError);
}

TEST(GTest, SignChangeBracket) {
  EXPECT_LT(G(6.29072), 0.0);
  EXPECT_GT(G(6.29073), 0.0);
  EXPECT_GT(G(7.0), G(6.5));
  EXPECT_NEAR(G(100.0), 2.7672889152089140861, 1e-14);
  EXPECT_THROW(G(0.0), DomainError);
}

TEST(HTest, SignChangeBracket) {
  EXPECT_LT(H(3.8024), 0.0);
  EXPECT_GT(H(3.8085), 0.0);
  EXPECT_GT(H(10.0), 0.0);
  EXPECT_THROW(H(-1.0), DomainError);
}

TEST(HTest, IncreasingOnSampledRange) {
  for (double t = 3.8; t + 0.1 <= 20.0; t += 0.1) {
    EXPECT_GT(H(t + 0.1), H(t)) << t;
  }
}

TEST(HTest, LogTwoPiTermIsRequired) {
  // Without the subtraction the displayed quantity has no sign change near
  // 3.8 at all.
  EXPECT_GT(H(3.8) + kLog2Pi, 1.8);
  EXPECT_NEAR(J(5.5, 3.8), kLog2Pi, 2e-4);
}

}  // namespace
}  // namespace zsym::bounds
