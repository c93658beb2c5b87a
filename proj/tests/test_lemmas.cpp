#include <gtest/gtest.h>

#include "ezeta/error.hpp"
#include "ezeta/lemmas.hpp"

using namespace ezeta;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ContractError;
}

}  // namespace

TEST(WeylDifferencing, SingleSpike) {
  const WeylCheck c = weyl_difference_check({5, {Complex(1.0, 0.0)}, 1, 1});
  EXPECT_DOUBLE_EQ(c.lhs, 1.0);
  EXPECT_DOUBLE_EQ(c.rhs, 2.0);  // ((b-a)+H)/H with b-a = 1
  EXPECT_TRUE(c.holds);
}

TEST(WeylDifferencing, ConstantSequenceDirectSums) {
  const std::int64_t L = 12;
  const WeylCheck c = weyl_difference_check({0, std::vector<Complex>(L, Complex(1.0, 0.0)), L, 1});
  EXPECT_DOUBLE_EQ(c.lhs, static_cast<double>(L * L));
  // sum_{|h|<L} (1 - |h|/L) (L - |h|), times (L + L)/L
  double inner = 0.0;
  for (std::int64_t h = -(L - 1); h <= L - 1; ++h) {
    inner += (1.0 - std::abs(static_cast<double>(h)) / L) * static_cast<double>(L - std::abs(h));
  }
  EXPECT_NEAR(c.rhs, 2.0 * inner, 1e-9);
  EXPECT_TRUE(c.holds);
}

TEST(WeylDifferencing, Contracts) {
  EXPECT_EQ(kind_of([] { weyl_difference_check({0, {}, 1, 1}); }), ErrorKind::ContractError);
  EXPECT_EQ(kind_of([] { weyl_difference_check({0, {Complex(1, 0)}, 0, 1}); }), ErrorKind::ContractError);
}

TEST(WeylDifferencing, RandomSuiteLambdaOne) {
  const WeylSuiteSummary s = weyl_suite(1000, 7);
  EXPECT_EQ(s.trials, 1000u);
  EXPECT_EQ(s.violations_lambda1, 0u);
  EXPECT_EQ(s.lambda2_trials, 1000u);
  const WeylSuiteSummary again = weyl_suite(1000, 7);
  EXPECT_EQ(again.violations_lambda2_literal, s.violations_lambda2_literal);
  EXPECT_EQ(again.violations_lambda2_clamped, s.violations_lambda2_clamped);
}

TEST(VanDerCorput, QuadraticPhase) {
  const double Q = 1e4;
  VdcTrial t;
  t.f = [Q](double x) { return x * x / (2 * Q); };
  t.f2 = [Q](double) { return 1.0 / Q; };
  t.a = 1;
  t.b = static_cast<std::int64_t>(Q);
  t.lambda = 1.0 / Q;
  t.alpha = 1.0;
  const VdcCheck c = vdc_second_derivative_bound(t);
  EXPECT_NEAR(c.bound, (Q - 1) / std::sqrt(Q) + std::sqrt(Q), 1e-9);
  EXPECT_LT(c.actual, 2.0 * std::sqrt(Q));
  EXPECT_LE(c.ratio, 1.0);
}

TEST(VanDerCorput, LinearPhaseViolatesHypothesis) {
  VdcTrial t;
  t.f = [](double x) { return 0.3 * x; };
  t.f2 = [](double) { return 0.0; };
  t.a = 1;
  t.b = 100;
  t.lambda = 0.01;
  EXPECT_EQ(kind_of([&] { vdc_second_derivative_bound(t); }), ErrorKind::HypothesisViolated);
}

TEST(VanDerCorput, StandardSuite) {
  const auto suite = vdc_suite();
  ASSERT_EQ(suite.size(), 50u);
  double worst = 0.0;
  for (const auto& t : suite) worst = std::max(worst, vdc_second_derivative_bound(t).ratio);
  EXPECT_LE(worst, 10.0);
}

namespace {

BProcessTrial sqrt_phase(double A, double N) {
  BProcessTrial t;
  t.f = [A](double x) { return A * std::sqrt(x); };
  t.f1 = [A](double x) { return A / (2 * std::sqrt(x)); };
  t.f2 = [A](double x) { return -A / (4 * x * std::sqrt(x)); };
  t.a = N;
  t.b = 2 * N;
  t.N = N;
  t.F = A * std::sqrt(N);
  return t;
}

}  // namespace

TEST(BProcess, SquareRootPhase) {
  const BProcessTrial t = sqrt_phase(200.0, 100.0);
  const BProcessCheck c = b_process_transform(t);
  EXPECT_LE(std::abs(c.lhs - c.rhs), c.error_bound);
  // f'(2N) = 7.07.., f'(N) = 10: nu = 8, 9, 10
  EXPECT_EQ(c.stationary_points, 3u);
}

TEST(BProcess, NoIntegerInDualRange) {
  // f'(x) between 0.141 and 0.2: no stationary point
  const BProcessTrial t = sqrt_phase(4.0, 100.0);
  const BProcessCheck c = b_process_transform(t);
  EXPECT_EQ(c.stationary_points, 0u);
  EXPECT_EQ(c.rhs, Complex(0.0, 0.0));
  EXPECT_LE(std::abs(c.lhs), c.error_bound);
}

TEST(BProcess, ConvexPhaseRejected) {
  BProcessTrial t = sqrt_phase(200.0, 100.0);
  t.f2 = [](double x) { return 1.0 / x; };
  EXPECT_EQ(kind_of([&] { b_process_transform(t); }), ErrorKind::HypothesisViolated);
}

TEST(BProcess, StandardSuite) {
  const auto suite = b_process_suite();
  ASSERT_EQ(suite.size(), 20u);
  double worst = 0.0;
  for (const auto& t : suite) {
    EXPECT_GE(t.F, 1e2 * (1 - 1e-12));
    EXPECT_LE(t.F, 1e4 * (1 + 1e-12));
    EXPECT_GE(t.N, 1e2 * (1 - 1e-12));
    EXPECT_LE(t.N, 1e3 * (1 + 1e-12));
    const BProcessCheck c = b_process_transform(t);
    const auto integers = static_cast<std::size_t>(std::floor(t.f1(t.a)) - std::ceil(t.f1(t.b)) + 1);
    EXPECT_EQ(c.stationary_points, integers);
    worst = std::max(worst, c.constant);
  }
  EXPECT_LE(worst, 10.0);
}
