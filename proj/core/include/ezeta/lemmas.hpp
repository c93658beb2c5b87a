#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ezeta/special.hpp"

namespace ezeta {

/// xi(a+1), ..., xi(b) of a sequence supported on (a, b].
struct WeylTrial {
  std::int64_t a = 0;
  std::vector<Complex> xi;
  std::int64_t H = 1;
  std::int64_t lambda = 1;
};

struct WeylCheck {
  double lhs = 0.0;
  /// Weight (1 - lambda |h| / H) exactly as stated, over |h| < H.
  double rhs = 0.0;
  /// Weight max(0, 1 - lambda |h| / H), which is the literal weight
  /// restricted to |h| < H / lambda.
  double rhs_clamped = 0.0;
  bool holds = false;
  bool holds_clamped = false;
};

/// |sum xi|^2 against ((b-a)+H)/H sum_{|h|<H} w(h) sum_n xi(n) conj(xi(n - lambda h)).
/// Throws ContractError on empty support or H, lambda < 1.
WeylCheck weyl_difference_check(const WeylTrial& trial);

struct VdcTrial {
  std::function<double(double)> f;
  std::function<double(double)> f2;
  std::int64_t a = 0;
  std::int64_t b = 1;
  double lambda = 1.0;
  double alpha = 1.0;
};

struct VdcCheck {
  double actual = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

/// |sum_{a<=n<=b} e(f(n))| against alpha (b-a) lambda^{1/2} + lambda^{-1/2}.
/// Throws HypothesisViolated when sampled |f''| leaves [lambda, alpha lambda].
VdcCheck vdc_second_derivative_bound(const VdcTrial& trial);

struct BProcessTrial {
  std::function<double(double)> f;
  std::function<double(double)> f1;
  std::function<double(double)> f2;
  /// Optional; sampled against F N^{-3} and F N^{-4} when present.
  std::function<double(double)> f3;
  std::function<double(double)> f4;
  double a = 1.0;
  double b = 2.0;
  double N = 1.0;
  double F = 1.0;
  double C = 10.0;
};

struct BProcessCheck {
  Complex lhs;
  Complex rhs;
  double error_bound = 0.0;
  /// |lhs - rhs| / (log(F/N + 2) + F^{-1/2} N)
  double constant = 0.0;
  std::size_t stationary_points = 0;
  /// Sampled ranges of |f''| N^2 / F, |f'''| N^3 / F, |f''''| N^4 / F.
  double f2_lo = 0.0;
  double f2_hi = 0.0;
  double f3_max = 0.0;
  double f4_max = 0.0;
};

/// sum_{a<=n<=b} e(f(n)) against
///   sum_{f'(b) <= nu <= f'(a)} e(-phi(nu) - 1/8) / |f''(x_nu)|^{1/2},
///   phi(nu) = -f(x_nu) + nu x_nu,
/// with x_nu from bisection on the decreasing f'.  Throws HypothesisViolated
/// unless f'' < 0 on [a, b] subset [N, 2N], and RootFindFailure if a
/// bisection bracket is lost.
BProcessCheck b_process_transform(const BProcessTrial& trial);

struct WeylSuiteSummary {
  std::size_t trials = 0;
  std::size_t violations_lambda1 = 0;
  std::size_t lambda2_trials = 0;
  std::size_t violations_lambda2_literal = 0;
  std::size_t violations_lambda2_clamped = 0;
};

/// `trials` random sequences with lambda = 1 and as many with lambda = 2,
/// lengths 1..64, complex Gaussian entries, H in 1..length+4.
WeylSuiteSummary weyl_suite(std::size_t trials, std::uint64_t seed);

/// Twenty phases c x^p with F in [1e2, 1e4] and N in [1e2, 1e3].
std::vector<BProcessTrial> b_process_suite();

/// Fifty phases A x^{3/2} on [N, 2N].
std::vector<VdcTrial> vdc_suite();

}  // namespace ezeta
