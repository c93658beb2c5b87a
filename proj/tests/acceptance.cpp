// One PASS/FAIL line per acceptance criterion.  Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ezeta/epstein.hpp"
#include "ezeta/error.hpp"
#include "ezeta/hardy.hpp"
#include "ezeta/lemmas.hpp"
#include "ezeta/transform.hpp"
#include "expsum_oracle.hpp"
#include "oracles.hpp"

using namespace ezeta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const QuadraticForm kForms[] = {QuadraticForm(1, 0, 1), QuadraticForm(1, 1, 1), QuadraticForm(2, 1, 3)};

Outcome functional_equation() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> sigma(-2.0, 3.0), t(-30.0, 30.0);
  double worst = 0.0;
  for (const auto& f : kForms) {
    for (int i = 0; i < 20; ++i) worst = std::max(worst, functional_equation_residual(f, Complex(sigma(rng), t(rng))));
  }
  return {worst < 1e-8, fmt("max residual %.3g over 60 points (limit 1e-8)", worst)};
}

Outcome residue() {
  double worst = 0.0;
  for (const auto& f : kForms) {
    const double h = 1e-6;
    const double v = (h * theta_continuation_eval(f, Complex(1.0 + h, 0.0)).value).real();
    worst = std::max(worst, std::abs(v - f.density()));
  }
  return {worst <= 1e-4, fmt("max |(s-1) zeta - 2pi/sqrt(delta)| = %.3g at s = 1+1e-6 (limit 1e-4)", worst)};
}

Outcome lemma2_law() {
  const QuadraticForm f(1, 0, 1);
  double C = 0.0;
  for (double t : {10.0, 20.0, 40.0}) {
    const Complex s(0.5, t);
    const Complex exact = theta_continuation_eval(f, s).value;
    for (double X : {t * t, 4 * t * t, t * t * t}) {
      ApproxParams p;
      p.X = X;
      p.t = t;
      C = std::max(C, std::abs(approx_eval(f, s, p).value - exact) * std::sqrt(X) / t);
    }
  }
  return {C <= 5.0, fmt("C = %.4g over t in {10,20,40}, X in {t^2,4t^2,t^3} (limit 5)", C)};
}

Outcome realness() {
  const QuadraticForm f(1, 0, 1);
  double worst = 0.0;
  for (int i = 0; i <= 900; ++i) worst = std::max(worst, std::abs(hardy_eval(f, 5.0 + 0.05 * i).imag_ratio));
  return {worst < 1e-8, fmt("max |Im f|/|f| = %.3g on [5,50] step 0.05 (limit 1e-8)", worst)};
}

Outcome zero_scan() {
  const QuadraticForm f(1, 0, 1);
  const auto zeros = sign_change_scan(f, 5.0, 15.0, 0.01);
  auto factor = oracle::scan_zeros(oracle::hardy_z_zeta, 5.0, 15.0, 0.01);
  const auto lz = oracle::scan_zeros(oracle::hardy_z_chi4, 5.0, 15.0, 0.01);
  factor.insert(factor.end(), lz.begin(), lz.end());
  std::sort(factor.begin(), factor.end());
  bool ok = zeros.size() == 4 && factor.size() == 4;
  double worst = 0.0, width = 0.0;
  for (std::size_t i = 0; ok && i < 4; ++i) {
    worst = std::max(worst, std::abs(zeros[i].gamma - factor[i]));
    width = std::max(width, zeros[i].t_hi - zeros[i].t_lo);
  }
  ok = ok && worst <= 1e-8 && width <= 1e-8;

  std::vector<double> gammas;
  for (const auto& z : sign_change_scan(f, 10.0, 500.0, default_scan_step(f, 500.0))) gammas.push_back(z.gamma);
  const GapReport g = gap_report(gammas, {{0.5, 1.0, 1.0, "T^1/2 log T"}, {3.0 / 7.0, 1.0, 0.0, "T^3/7"}});
  const LawCheck& main = g.law_checks[0];
  ok = ok && main.passes == main.windows;
  return {ok, fmt("%zu zeros on [5,15], max |gamma - factor oracle| = %.2g, bracket <= %.2g; [10,500]: %zu zeros, "
                  "T^1/2 log T windows %zu/%zu (C = %.3f), T^3/7 windows %zu/%zu (C = %.3f)",
                  zeros.size(), worst, width, gammas.size(), main.passes, main.windows, main.empirical_constant,
                  g.law_checks[1].passes, g.law_checks[1].windows, g.law_checks[1].empirical_constant)};
}

Outcome gaussian_deficit() {
  const QuadraticForm f(1, 0, 1);
  const auto zeros = sign_change_scan(f, 92.0, 108.0, 0.01);
  std::size_t empty_ok = 0, empty_n = 0, one_ok = 0, one_n = 0;
  double empty_worst = 0.0, one_least = 1e300, tol = 0.0;
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    const double gap = zeros[i + 1].gamma - zeros[i].gamma;
    const GaussianIntegral a =
        gaussian_integral(f, HardyConfig::window(0.5 * (zeros[i].gamma + zeros[i + 1].gamma), 0.4 * gap, 0.2 * gap));
    tol = a.quad_tol;
    if (a.sign_changes == 0) {
      ++empty_n;
      empty_worst = std::max(empty_worst, a.deficit / a.quad_tol);
      if (a.deficit <= 3.0 * a.quad_tol) ++empty_ok;
    }
    if (i == 0) continue;
    const double h = 0.4 * std::min(gap, zeros[i].gamma - zeros[i - 1].gamma);
    const GaussianIntegral b = gaussian_integral(f, HardyConfig::window(zeros[i].gamma + 0.1 * h, h, 0.5 * h));
    if (b.sign_changes == 1) {
      ++one_n;
      one_least = std::min(one_least, b.deficit / b.quad_tol);
      if (b.deficit > 10.0 * b.quad_tol) ++one_ok;
    }
  }
  const bool ok = empty_n >= 10 && one_n >= 10 && empty_ok == empty_n && one_ok == one_n;
  return {ok, fmt("zero-free %zu/%zu with deficit <= 3 tol (max %.3g tol); one-zero %zu/%zu with deficit > 10 tol "
                  "(min %.3g tol); tol = %.0e",
                  empty_ok, empty_n, empty_worst, one_ok, one_n, one_least, tol)};
}

Outcome weyl() {
  const WeylSuiteSummary s = weyl_suite(1000, 7);
  return {s.trials == 1000 && s.violations_lambda1 == 0,
          fmt("lambda=1: %zu violations in %zu trials; lambda=2 (informational): literal %zu, clamped %zu of %zu",
              s.violations_lambda1, s.trials, s.violations_lambda2_literal, s.violations_lambda2_clamped,
              s.lambda2_trials)};
}

Outcome bprocess() {
  double C = 0.0;
  std::size_t n = 0, sp = 0;
  for (const auto& t : b_process_suite()) {
    const BProcessCheck c = b_process_transform(t);
    C = std::max(C, c.constant);
    sp += c.stationary_points;
    ++n;
  }
  return {n == 20 && C <= 10.0, fmt("max C = %.3f over %zu phases, %zu stationary points (limit 10)", C, n, sp)};
}

Outcome vdc() {
  double worst = 0.0;
  std::size_t n = 0;
  for (const auto& t : vdc_suite()) {
    worst = std::max(worst, vdc_second_derivative_bound(t).ratio);
    ++n;
  }
  return {n == 50 && worst <= 10.0, fmt("max ratio = %.3f over %zu phases (limit 10)", worst, n)};
}

Outcome stationary() {
  std::mt19937_64 rng(10);
  double g_worst = 0.0, res_worst = 0.0, fd_worst = 0.0;
  std::size_t done = 0, fd_done = 0;
  while (done < 1000 || fd_done < 100) {
    const ExpSumScenario sc = desk_scenario(static_cast<int>(rng() % kDeskScenarioCount));
    const auto m = static_cast<std::int64_t>(1 + rng() % 8);
    const double x = std::uniform_real_distribution<double>(0.5, sc.x_extent())(rng);
    const auto lo = static_cast<std::int64_t>(std::ceil(2 * m * a_of(sc, x)));
    const auto hi = static_cast<std::int64_t>(std::floor(2 * m * b_of(sc, x)));
    if (lo > hi) continue;
    const std::int64_t n = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    if (done < 1000) {
      const StationaryData st = stationary_solve(sc, m, n, x);
      res_worst = std::max(res_worst, st.residual / std::max<double>(1.0, std::abs(n)));
      g_worst = std::max(g_worst, std::abs(st.g_direct - st.g_closed) / std::max(1.0, std::abs(st.g_closed)));
      ++done;
    }
    const double x0 = singular_point(sc, m, n);
    if (fd_done < 100 && x >= 1.0 && x < 0.9 * x0) {
      auto second = [&](long double h) {
        return (oracle::g_independent(sc, m, n, x + h) - 2 * oracle::g_independent(sc, m, n, x) +
                oracle::g_independent(sc, m, n, x - h)) / (h * h);
      };
      const long double h = 1e-3L * std::min<long double>(x, x0 - x);
      const double fd = static_cast<double>((16 * second(h / 2) - second(h)) / 15);
      const double g2 = g_second_derivative(sc, m, n, x);
      fd_worst = std::max(fd_worst, std::abs(g2 - fd) / std::abs(g2));
      ++fd_done;
    }
  }
  const bool ok = g_worst <= 1e-9 && res_worst <= 1e-9 && fd_worst <= 1e-6;
  return {ok, fmt("dual-route G %.2g, residual %.2g over 1000 triples (limit 1e-9); G'' vs finite difference %.2g "
                  "over 100 (limit 1e-6)",
                  g_worst, res_worst, fd_worst)};
}

Outcome reorder() {
  double worst = 0.0;
  std::size_t terms = 0;
  bool ok = true;
  for (int i = 0; i < kDeskScenarioCount; ++i) {
    const ExpSumScenario sc = desk_scenario(i);
    for (std::int64_t m = 1; m <= 16; ++m) {
      const ReorderCheck rc = reorder_identity_check(sc, m);
      ok = ok && rc.equal;
      worst = std::max(worst, std::abs(rc.lhs - rc.rhs) / rc.scale);
      terms += rc.terms;
    }
  }
  return {ok, fmt("max |lhs-rhs|/scale = %.2g over 5 scenarios, m <= 16, %zu terms (limit 1e-10)", worst, terms)};
}

Outcome exponents() {
  const auto ids = exponent_identities();
  bool ok = ids.size() == 4 && ids[0].result == Rational::of(0, 1) && ids[2].result == Rational::of(0, 1);
  double C = 0.0;
  for (int i = 0; i < kDeskScenarioCount; ++i) C = std::max(C, bound_report(desk_scenario(i)).ratio_improved);
  ok = ok && std::isfinite(C);
  return {ok, fmt("(6/11)(11/12) - 1/2 = %s, (4/7)(7/8) - 1/2 = %s; desk max normalized/improved C = %.4f",
                  ids[0].result.str().c_str(), ids[2].result.str().c_str(), C)};
}

Outcome windows() {
  WindowStat f, gp, gd, x, j;
  for (int i = 0; i < kDeskScenarioCount; ++i) {
    const WindowReport w = asymptotic_windows(desk_scenario(i), 16);
    for (auto [dst, src] : {std::pair{&f, &w.f_second}, {&gp, &w.g_second_prime}, {&gd, &w.g_second_delta},
                            {&x, &w.x_doubleprime}, {&j, &w.jm_length}}) {
      if (src->samples == 0) continue;
      dst->add(src->lo);
      dst->add(src->hi);
    }
  }
  const bool ok = f.within(50) && gp.within(50) && gd.within(50) && x.within(50) && j.samples > 0 && j.hi <= 50;
  return {ok, fmt("F'' [%.3g, %.3g]; G'' on J'_m [%.3g, %.3g]; G'' on S_m(n,delta) [%.3g, %.3g]; x on J''_m "
                  "[%.3g, %.3g]; |J_m| <= %.3g (window [1/50, 50])",
                  f.lo, f.hi, gp.lo, gp.hi, gd.lo, gd.hi, x.lo, x.hi, j.hi)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "functional equation", 60, functional_equation},
      {2, "residue at s = 1", 0, residue},
      {3, "approximate formula error law", 120, lemma2_law},
      {4, "realness of W", 0, realness},
      {5, "zero scan and gap law", 300, zero_scan},
      {6, "Gaussian-integral deficit", 0, gaussian_deficit},
      {7, "Weyl differencing", 0, weyl},
      {8, "B-process", 120, bprocess},
      {9, "van der Corput bound", 0, vdc},
      {10, "stationary-point machinery", 0, stationary},
      {11, "reorder identity", 0, reorder},
      {12, "exponent thresholds", 0, exponents},
      {13, "asymptotic windows", 0, windows},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += fmt(" [runtime limit %.0f s exceeded]", c.limit_s);
    }
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed;
}
