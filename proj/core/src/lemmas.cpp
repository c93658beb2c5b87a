#include "ezeta/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {

constexpr double kSlack = 1e-12;

// sum_n xi(n) conj(xi(n - shift)) over the support
Complex correlation(const std::vector<Complex>& xi, std::int64_t shift) {
  const auto len = static_cast<std::int64_t>(xi.size());
  Complex acc = 0.0;
  for (std::int64_t i = std::max<std::int64_t>(0, shift); i < len && i - shift < len; ++i) {
    acc += xi[static_cast<std::size_t>(i)] * std::conj(xi[static_cast<std::size_t>(i - shift)]);
  }
  return acc;
}

double bisect_derivative(const std::function<double(double)>& f1, double a, double b, double nu) {
  double lo = a;
  double hi = b;
  if (f1(lo) < nu || f1(hi) > nu) {
    fail(ErrorKind::RootFindFailure, "f' = " + std::to_string(nu) + " is not bracketed on [a, b]");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f1(mid) >= nu) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Complex standard_normal_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

WeylTrial random_weyl_trial(std::mt19937_64& rng, std::int64_t lambda) {
  std::uniform_int_distribution<std::int64_t> length(1, 64);
  WeylTrial trial;
  const std::int64_t len = length(rng);
  std::uniform_int_distribution<std::int64_t> width(1, len + 4);
  trial.H = width(rng);
  trial.lambda = lambda;
  trial.xi.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) trial.xi.push_back(standard_normal_complex(rng));
  return trial;
}

}  // namespace

WeylCheck weyl_difference_check(const WeylTrial& trial) {
  require(!trial.xi.empty(), ErrorKind::ContractError, "Weyl differencing needs a nonempty support");
  require(trial.H >= 1 && trial.lambda >= 1, ErrorKind::ContractError, "H and lambda must be >= 1");
  const auto len = static_cast<double>(trial.xi.size());
  const auto H = static_cast<double>(trial.H);

  Complex total = 0.0;
  double l1 = 0.0;
  for (const Complex& v : trial.xi) {
    total += v;
    l1 += std::abs(v);
  }

  Complex literal = 0.0;
  Complex clamped = 0.0;
  for (std::int64_t h = -(trial.H - 1); h <= trial.H - 1; ++h) {
    const double w = 1.0 - static_cast<double>(trial.lambda * std::abs(h)) / H;
    const Complex corr = correlation(trial.xi, trial.lambda * h);
    literal += w * corr;
    clamped += std::max(0.0, w) * corr;
  }
  const double prefactor = (len + H) / H;

  WeylCheck out;
  out.lhs = std::norm(total);
  out.rhs = prefactor * literal.real();
  out.rhs_clamped = prefactor * clamped.real();
  const double tol = 1e-9 * std::max(1.0, l1 * l1);
  out.holds = out.lhs <= out.rhs + tol;
  out.holds_clamped = out.lhs <= out.rhs_clamped + tol;
  return out;
}

VdcCheck vdc_second_derivative_bound(const VdcTrial& trial) {
  require(trial.b > trial.a, ErrorKind::ContractError, "need a < b");
  require(trial.lambda > 0.0, ErrorKind::HypothesisViolated, "lambda must be positive");
  require(trial.alpha >= 1.0, ErrorKind::HypothesisViolated, "alpha must be >= 1");
  const double width = static_cast<double>(trial.b - trial.a);
  const std::int64_t samples = std::clamp<std::int64_t>(4 * (trial.b - trial.a), 64, 1 << 14);
  for (std::int64_t j = 0; j <= samples; ++j) {
    const double x = static_cast<double>(trial.a) + width * static_cast<double>(j) / static_cast<double>(samples);
    const double v = std::abs(trial.f2(x));
    if (!(v >= trial.lambda * (1.0 - kSlack) && v <= trial.alpha * trial.lambda * (1.0 + kSlack))) {
      fail(ErrorKind::HypothesisViolated,
           "|f''(" + std::to_string(x) + ")| = " + std::to_string(v) + " leaves [lambda, alpha lambda]");
    }
  }
  Complex acc = 0.0;
  for (std::int64_t n = trial.a; n <= trial.b; ++n) acc += e_unit(trial.f(static_cast<double>(n)));

  VdcCheck out;
  out.actual = std::abs(acc);
  out.bound = trial.alpha * width * std::sqrt(trial.lambda) + 1.0 / std::sqrt(trial.lambda);
  out.ratio = out.actual / out.bound;
  return out;
}

BProcessCheck b_process_transform(const BProcessTrial& trial) {
  require(trial.a < trial.b, ErrorKind::ContractError, "need a < b");
  require(trial.F > 0.0 && trial.N > 0.0, ErrorKind::ContractError, "need F, N > 0");
  require(trial.a >= trial.N * (1.0 - kSlack) && trial.b <= 2.0 * trial.N * (1.0 + kSlack),
          ErrorKind::HypothesisViolated, "[a, b] must lie in [N, 2N]");

  BProcessCheck out;
  out.f2_lo = std::numeric_limits<double>::infinity();
  const double n2 = trial.N * trial.N;
  constexpr int kSamples = 1024;
  for (int j = 0; j <= kSamples; ++j) {
    const double x = trial.a + (trial.b - trial.a) * j / kSamples;
    const double v = trial.f2(x);
    if (!(v < 0.0)) fail(ErrorKind::HypothesisViolated, "f'' must be negative on [a, b]");
    const double scaled = -v * n2 / trial.F;
    out.f2_lo = std::min(out.f2_lo, scaled);
    out.f2_hi = std::max(out.f2_hi, scaled);
    if (trial.f3) out.f3_max = std::max(out.f3_max, std::abs(trial.f3(x)) * n2 * trial.N / trial.F);
    if (trial.f4) out.f4_max = std::max(out.f4_max, std::abs(trial.f4(x)) * n2 * n2 / trial.F);
  }

  for (auto n = static_cast<std::int64_t>(std::ceil(trial.a));
       n <= static_cast<std::int64_t>(std::floor(trial.b)); ++n) {
    out.lhs += e_unit(trial.f(static_cast<double>(n)));
  }

  const double alpha = trial.f1(trial.b);
  const double beta = trial.f1(trial.a);
  for (auto nu = static_cast<std::int64_t>(std::ceil(alpha));
       nu <= static_cast<std::int64_t>(std::floor(beta)); ++nu) {
    const auto nud = static_cast<double>(nu);
    const double x = bisect_derivative(trial.f1, trial.a, trial.b, nud);
    const double phase = -trial.f(x) + nud * x;
    out.rhs += e_unit(-phase - 0.125) / std::sqrt(std::abs(trial.f2(x)));
    ++out.stationary_points;
  }

  const double unit = std::log(trial.F / trial.N + 2.0) + trial.N / std::sqrt(trial.F);
  out.error_bound = trial.C * unit;
  out.constant = std::abs(out.lhs - out.rhs) / unit;
  return out;
}

WeylSuiteSummary weyl_suite(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WeylSuiteSummary out;
  for (std::size_t i = 0; i < trials; ++i) {
    const WeylCheck one = weyl_difference_check(random_weyl_trial(rng, 1));
    ++out.trials;
    if (!one.holds) ++out.violations_lambda1;
    const WeylCheck two = weyl_difference_check(random_weyl_trial(rng, 2));
    ++out.lambda2_trials;
    if (!two.holds) ++out.violations_lambda2_literal;
    if (!two.holds_clamped) ++out.violations_lambda2_clamped;
  }
  return out;
}

std::vector<BProcessTrial> b_process_suite() {
  constexpr double kPowers[] = {0.5, 0.75, 1.5, 2.5, 0.25};
  std::vector<BProcessTrial> suite;
  for (int i = 0; i < 20; ++i) {
    const double F = std::pow(10.0, 2.0 + 2.0 * i / 19.0);
    const double N = std::pow(10.0, 2.0 + ((7 * i) % 20) / 19.0 * std::min(1.0, std::log10(F) - 2.0));
    const double p = kPowers[i % 5];
    const double sign = p < 1.0 ? 1.0 : -1.0;
    const double A = sign * F / std::pow(N, p);
    BProcessTrial t;
    t.f = [A, p](double x) { return A * std::pow(x, p); };
    t.f1 = [A, p](double x) { return A * p * std::pow(x, p - 1.0); };
    t.f2 = [A, p](double x) { return A * p * (p - 1.0) * std::pow(x, p - 2.0); };
    t.f3 = [A, p](double x) { return A * p * (p - 1.0) * (p - 2.0) * std::pow(x, p - 3.0); };
    t.f4 = [A, p](double x) {
      return A * p * (p - 1.0) * (p - 2.0) * (p - 3.0) * std::pow(x, p - 4.0);
    };
    t.a = N;
    t.b = 2.0 * N;
    t.N = N;
    t.F = F;
    suite.push_back(std::move(t));
  }
  return suite;
}

std::vector<VdcTrial> vdc_suite() {
  constexpr std::int64_t kLengths[] = {100, 200, 500, 1000, 2000};
  std::vector<VdcTrial> suite;
  for (int i = 0; i < 50; ++i) {
    const std::int64_t N = kLengths[i % 5];
    const double A = std::pow(10.0, -3.0 + 4.0 * (i / 5) / 9.0);
    VdcTrial t;
    t.f = [A](double x) { return A * x * std::sqrt(x); };
    t.f2 = [A](double x) { return 0.75 * A / std::sqrt(x); };
    t.a = N;
    t.b = 2 * N;
    t.lambda = 0.75 * A / std::sqrt(2.0 * static_cast<double>(N));
    t.alpha = std::sqrt(2.0);
    suite.push_back(std::move(t));
  }
  return suite;
}

}  // namespace ezeta
