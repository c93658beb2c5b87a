#include "ezeta/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {

constexpr double kPi = std::numbers::pi;

struct Coeffs {
  double a;
  double b;
  double c;
  double absd;
};

Coeffs coeffs(const ExpSumScenario& sc) {
  return {static_cast<double>(sc.qstar.a()), static_cast<double>(sc.qstar.b()),
          static_cast<double>(sc.qstar.c()), static_cast<double>(sc.qstar.delta())};
}

double qvalue(const Coeffs& q, double x, double y) { return q.a * x * x + q.b * x * y + q.c * y * y; }

// D = n - 4 c m r
double shifted(const ExpSumScenario& sc, std::int64_t m, std::int64_t n) {
  return static_cast<double>(n) - 4.0 * coeffs(sc).c * static_cast<double>(m) * sc.r;
}

// m^{2/3} t^{1/3} / P^{1/3}
double big_m(const ExpSumScenario& sc, std::int64_t m) {
  return std::cbrt(static_cast<double>(m) * static_cast<double>(m) * sc.t / sc.P());
}

struct Bracket {
  double alpha;
  double four_c_m;
  double value;  // 4 c M - alpha x^{2/3}
};

Bracket bracket(const ExpSumScenario& sc, std::int64_t m, std::int64_t n, double x) {
  const Coeffs q = coeffs(sc);
  const double D = shifted(sc, m, n);
  if (!(D > 0.0)) {
    fail(ErrorKind::NoStationaryPoint, "n - 4 c m r must be positive, n = " + std::to_string(n));
  }
  const double alpha = std::cbrt(D * D * q.absd);
  const double four_c_m = 4.0 * q.c * big_m(sc, m);
  return {alpha, four_c_m, four_c_m - alpha * std::cbrt(x * x)};
}

double a_end(const ExpSumScenario& sc, double D, std::int64_t m, double n_power) {
  const Coeffs q = coeffs(sc);
  return std::sqrt(D) * std::pow(n_power, 0.75) /
         std::sqrt(static_cast<double>(m) * sc.kappa() * q.absd);
}

}  // namespace

double f_phase(const ExpSumScenario& sc, double x, double y) {
  const double Q = qvalue(coeffs(sc), x, y);
  return Q * sc.r + sc.t / kPi * phi(sc.phi_scale() * Q);
}

double g_third_derivative(const ExpSumScenario& sc, double x, double y) {
  const Coeffs q = coeffs(sc);
  const double s = sc.phi_scale();
  const double u = s * qvalue(q, x, y);
  const double qp = q.b * x + 2.0 * q.c * y;
  return phi_derivatives(u, 3) * s * s * s * qp * qp * qp +
         3.0 * phi_derivatives(u, 2) * s * s * qp * 2.0 * q.c;
}

double F_value(const ExpSumScenario& sc, double x, double y) {
  const Coeffs q = coeffs(sc);
  return (q.b * x + 2.0 * q.c * y) * (sc.r + sc.kappa() / std::sqrt(qvalue(q, x, y)));
}

double F_prime(const ExpSumScenario& sc, double x, double y) {
  const Coeffs q = coeffs(sc);
  const double Q = qvalue(q, x, y);
  return 2.0 * q.c * sc.r + sc.kappa() * q.absd * x * x / (2.0 * Q * std::sqrt(Q));
}

double F_second(const ExpSumScenario& sc, double x, double y) {
  const Coeffs q = coeffs(sc);
  const double Q = qvalue(q, x, y);
  return -0.75 * sc.kappa() * q.absd * x * x * (q.b * x + 2.0 * q.c * y) / (Q * Q * std::sqrt(Q));
}

double a_of(const ExpSumScenario& sc, double x) {
  const Coeffs q = coeffs(sc);
  return 2.0 * q.c * sc.r + sc.kappa() * q.absd * x * x / (2.0 * std::pow(sc.Nprime, 1.5));
}

double b_of(const ExpSumScenario& sc, double x) {
  const Coeffs q = coeffs(sc);
  const double floor_q = std::max(sc.N, q.absd * x * x / (4.0 * q.c));
  return 2.0 * q.c * sc.r + sc.kappa() * q.absd * x * x / (2.0 * std::pow(floor_q, 1.5));
}

Interval upper_branch(const ExpSumScenario& sc, double x) {
  const Coeffs q = coeffs(sc);
  const double disc_hi = 4.0 * q.c * sc.Nprime - q.absd * x * x;
  if (disc_hi < 0.0) return {1.0, 0.0};
  const double disc_lo = std::max(0.0, 4.0 * q.c * sc.N - q.absd * x * x);
  return {(-q.b * x + std::sqrt(disc_lo)) / (2.0 * q.c), (-q.b * x + std::sqrt(disc_hi)) / (2.0 * q.c)};
}

double g_closed_form(const ExpSumScenario& sc, std::int64_t m, std::int64_t n, double x) {
  const Coeffs q = coeffs(sc);
  const Bracket br = bracket(sc, m, n, x);
  if (br.value < -1e-12 * br.four_c_m) {
    fail(ErrorKind::NoStationaryPoint, "x lies beyond the singular point of G");
  }
  const double v = std::max(0.0, br.value);
  return q.b * static_cast<double>(n) * x / (2.0 * q.c) + v * std::sqrt(v) / (2.0 * q.c);
}

double g_second_derivative(const ExpSumScenario& sc, std::int64_t m, std::int64_t n, double x) {
  const Coeffs q = coeffs(sc);
  const Bracket br = bracket(sc, m, n, x);
  if (br.value <= 1e-12 * br.four_c_m) {
    fail(ErrorKind::SingularPoint, "G'' is singular at x = " + std::to_string(x));
  }
  return br.alpha * br.four_c_m / (6.0 * q.c * std::pow(x, 4.0 / 3.0) * std::sqrt(br.value));
}

double g_second_derivative_as_printed(const ExpSumScenario& sc, std::int64_t m, std::int64_t n,
                                      double x) {
  const Coeffs q = coeffs(sc);
  const Bracket br = bracket(sc, m, n, x);
  if (br.value <= 1e-12 * br.four_c_m) {
    fail(ErrorKind::SingularPoint, "G'' is singular at x = " + std::to_string(x));
  }
  const double x23 = std::cbrt(x * x);
  return -br.alpha / (6.0 * q.c * x23 * x23) * (br.alpha * x23 + br.four_c_m) / std::sqrt(br.value);
}

double singular_point(const ExpSumScenario& sc, std::int64_t m, std::int64_t n) {
  const Coeffs q = coeffs(sc);
  const double D = shifted(sc, m, n);
  if (!(D > 0.0)) return std::numeric_limits<double>::infinity();
  return std::pow(4.0 * q.c, 1.5) * static_cast<double>(m) * sc.kappa() / (D * std::sqrt(q.absd));
}

StationaryData stationary_solve(const ExpSumScenario& sc, std::int64_t m, std::int64_t n, double x) {
  require(m >= 1, ErrorKind::DomainError, "m must be positive");
  require(x > 0.0 && std::isfinite(x), ErrorKind::NoStationaryPoint, "x must be positive");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const Interval branch = upper_branch(sc, x);
  if (branch.lo > branch.hi || nd < 2.0 * md * a_of(sc, x) || nd > 2.0 * md * b_of(sc, x)) {
    fail(ErrorKind::NoStationaryPoint,
         "n = " + std::to_string(n) + " is outside [2m a(x), 2m b(x)] at x = " + std::to_string(x));
  }

  double lo = branch.lo;
  double hi = branch.hi;
  for (int i = 0; i < 200 && hi > lo; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (2.0 * md * F_prime(sc, x, mid) >= nd) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double y = std::abs(2.0 * md * F_prime(sc, x, lo) - nd) <=
                           std::abs(2.0 * md * F_prime(sc, x, hi) - nd)
                       ? lo
                       : hi;

  StationaryData out;
  out.m = m;
  out.n = n;
  out.x = x;
  out.y_star = y;
  out.residual = std::abs(2.0 * md * F_prime(sc, x, y) - nd);
  if (out.residual > 1e-9 * std::max(1.0, std::abs(nd))) {
    fail(ErrorKind::RootFindFailure, "stationary residual " + std::to_string(out.residual));
  }
  out.fxx = F_second(sc, x, y);
  out.g_direct = 2.0 * md * F_value(sc, x, y) - nd * y;
  out.g_closed = g_closed_form(sc, m, n, x);
  out.g_value = out.g_closed;
  if (std::abs(out.g_direct - out.g_closed) > 1e-9 * std::max(1.0, std::abs(out.g_closed))) {
    fail(ErrorKind::PrecisionExceeded, "closed-form and direct G disagree at x = " + std::to_string(x));
  }
  try {
    out.g_second = g_second_derivative(sc, m, n, x);
  } catch (const Error&) {
    out.g_second = std::numeric_limits<double>::infinity();
  }
  return out;
}

DomainSplit domain_split(const ExpSumScenario& sc, std::int64_t m, std::int64_t n) {
  require(m >= 1, ErrorKind::DomainError, "m must be positive");
  const Coeffs q = coeffs(sc);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double kappa = sc.kappa();
  const double base = 4.0 * q.c * md * sc.r;

  DomainSplit out;
  out.m = m;
  out.n = n;
  out.Jm = {base, base + 2.0 * q.c * md * kappa * sc.Nprime / std::pow(sc.N, 1.5)};
  const double mid = base + q.c * md * kappa / std::sqrt(sc.Nprime);
  out.Jm_prime = {base, mid};
  out.Jm_doubleprime = {mid, out.Jm.hi};
  out.in_Jm_prime = nd >= base && nd < mid;
  out.in_Jm_doubleprime = nd >= mid && nd <= out.Jm.hi;
  out.jm_ratio = out.Jm.length() / (md * std::sqrt(sc.K) / std::sqrt(sc.N));

  const double D = nd - base;
  if (!(D > 0.0)) {
    out.empty = true;
    out.x0 = std::numeric_limits<double>::infinity();
    return out;
  }
  out.A = a_end(sc, D, m, sc.N);
  out.x0 = singular_point(sc, m, n);
  out.B = std::min({sc.x_extent(), a_end(sc, D, m, sc.Nprime), out.x0});
  out.empty = !(std::floor(out.B) >= std::ceil(out.A));

  const double root_n = std::sqrt(sc.N);
  auto clip = [&](double lo, double hi) { return Interval{std::max(lo, out.A), std::min(hi, out.B)}; };
  const Interval first = clip(out.x0 - 1.0, out.x0);
  if (first.hi >= first.lo) out.pieces.push_back({0.0, first});
  double delta = 1.0;
  double reach = out.x0 - 1.0;
  while (reach > out.A && delta < 1e15) {
    out.delta_levels.push_back(delta);
    const Interval piece = clip(out.x0 - 2.0 * delta, out.x0 - delta);
    if (piece.hi >= piece.lo) out.pieces.push_back({delta, piece});
    reach = out.x0 - 2.0 * delta;
    delta *= 2.0;
  }
  out.covers = out.B <= out.x0 && reach <= out.A;
  double used = 0.0;
  for (const auto& p : out.pieces) used = std::max(used, p.delta);
  out.delta_max_over_sqrt_n = used / root_n;
  return out;
}

ReorderCheck reorder_identity_check(const ExpSumScenario& sc, std::int64_t m) {
  require(m >= 1, ErrorKind::DomainError, "m must be positive");
  const double md = static_cast<double>(m);
  const auto x_max = static_cast<std::int64_t>(std::floor(sc.x_extent()));

  auto n_range = [&](std::int64_t x) {
    const auto xd = static_cast<double>(x);
    return std::pair{static_cast<std::int64_t>(std::ceil(2.0 * md * a_of(sc, xd))),
                     static_cast<std::int64_t>(std::floor(2.0 * md * b_of(sc, xd)))};
  };
  auto member = [&](std::int64_t x, std::int64_t n) {
    const auto [lo, hi] = n_range(x);
    return n >= lo && n <= hi;
  };
  auto term = [&](std::int64_t x, std::int64_t n) {
    const auto xd = static_cast<double>(x);
    const StationaryData st = stationary_solve(sc, m, n, xd);
    return std::pair{e_unit(st.g_value) / std::sqrt(2.0 * md * std::abs(st.fxx)),
                     1.0 / std::sqrt(2.0 * md * std::abs(st.fxx))};
  };

  ReorderCheck out;
  out.n_lo = std::numeric_limits<std::int64_t>::max();
  out.n_hi = std::numeric_limits<std::int64_t>::min();
  for (std::int64_t x = 1; x <= x_max; ++x) {
    const auto [lo, hi] = n_range(x);
    for (std::int64_t n = lo; n <= hi; ++n) {
      const auto [value, weight] = term(x, n);
      out.lhs += value;
      out.scale += weight;
      ++out.terms;
    }
    if (lo <= hi) {
      out.n_lo = std::min(out.n_lo, lo);
      out.n_hi = std::max(out.n_hi, hi);
    }
  }
  if (out.terms == 0) {
    out.n_lo = 0;
    out.n_hi = -1;
    out.equal = true;
    return out;
  }

  std::size_t rhs_terms = 0;
  for (std::int64_t n = out.n_lo; n <= out.n_hi; ++n) {
    const DomainSplit split = domain_split(sc, m, n);
    const auto nd = static_cast<double>(n);
    if (nd < split.Jm.lo || nd > split.Jm.hi) out.jm_covers = false;
    if (split.empty && split.A == 0.0) continue;
    const auto x_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(split.A)) - 1);
    const auto x_hi = std::min<std::int64_t>(x_max, static_cast<std::int64_t>(std::ceil(split.B)) + 1);
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
      if (!member(x, n)) continue;
      out.rhs += term(x, n).first;
      ++rhs_terms;
      const auto xd = static_cast<double>(x);
      if (xd < split.A - 1.0 || xd > split.B + 1.0) out.ab_covers = false;
    }
  }
  if (rhs_terms != out.terms) out.ab_covers = false;
  out.equal = std::abs(out.lhs - out.rhs) <= 1e-10 * std::max(out.scale, 1e-300);
  return out;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  require(den != 0, ErrorKind::DomainError, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

Rational operator+(Rational a, Rational b) { return Rational::of(a.num * b.den + b.num * a.den, a.den * b.den); }
Rational operator-(Rational a, Rational b) { return Rational::of(a.num * b.den - b.num * a.den, a.den * b.den); }
Rational operator*(Rational a, Rational b) { return Rational::of(a.num * b.num, a.den * b.den); }

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<ExponentIdentity> exponent_identities() {
  auto make = [](std::string label, Rational ke, Rational kp, Rational tp) {
    return ExponentIdentity{std::move(label), ke, kp, tp, ke * kp + tp};
  };
  return {
      make("trivial K^{11/12} T^{-1/2} at K = T^{6/11}", Rational::of(6, 11), Rational::of(11, 12),
           Rational::of(-1, 2)),
      make("trivial K^{25/12} T^{-3/2} at K = T^{6/11}", Rational::of(6, 11), Rational::of(25, 12),
           Rational::of(-3, 2)),
      make("improved K^{7/8} T^{-1/2} at K = T^{4/7}", Rational::of(4, 7), Rational::of(7, 8),
           Rational::of(-1, 2)),
      make("improved K^{17/8} T^{-3/2} at K = T^{4/7}", Rational::of(4, 7), Rational::of(17, 8),
           Rational::of(-3, 2)),
  };
}

double intermediate_bound(const ExpSumScenario& sc, std::int64_t M) {
  require(M >= 1, ErrorKind::DomainError, "M must be positive");
  const double m = static_cast<double>(M);
  const double N = sc.N;
  const double K = sc.K;
  const double T = sc.T;
  return m * std::pow(N, 1.5) + N * N / m + m * std::pow(N, 2.5) * std::pow(K, 1.5) / (T * T) +
         m * m * m * std::sqrt(N) * std::sqrt(K) + N * N / (std::sqrt(m) * std::pow(K, 0.25)) +
         m * N * std::sqrt(K) * std::log(T);
}

BoundReport bound_report(const ExpSumScenario& sc) {
  const RawSum sum = raw_double_sum(sc);
  BoundReport out;
  const double K = sc.K;
  const double T = sc.T;
  out.points = sum.points;
  out.raw_abs = std::abs(sum.total);
  out.quadrant_abs = std::abs(sum.quadrants[0]);
  out.normalized = std::pow(K, 0.25) * std::pow(sc.N, -0.25) / std::sqrt(T) * out.raw_abs;
  out.trivial_bound = std::pow(K, 11.0 / 12.0) / std::sqrt(T) + std::pow(K, 25.0 / 12.0) / std::pow(T, 1.5);
  out.improved_bound =
      std::pow(K, 7.0 / 8.0) / std::sqrt(T) * std::log(T) + std::pow(K, 17.0 / 8.0) / std::pow(T, 1.5);
  out.ratio_trivial = out.normalized / out.trivial_bound;
  out.ratio_improved = out.normalized / out.improved_bound;

  auto choice = [&](double exact) {
    IntermediateBound ib;
    ib.M = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(exact)));
    ib.value = intermediate_bound(sc, ib.M);
    ib.ratio = out.quadrant_abs * out.quadrant_abs / ib.value;
    return ib;
  };
  out.trivial_choice = choice(std::cbrt(sc.N) * std::pow(K, -1.0 / 6.0));
  out.improved_choice = choice(std::sqrt(sc.N) * std::pow(K, -0.25));
  out.identities = exponent_identities();
  return out;
}

WeylStepDiagnostic weyl_step_diagnostic(const ExpSumScenario& sc, std::int64_t M) {
  require(M >= 1 && static_cast<double>(M) <= sc.N, ErrorKind::DomainError, "need 1 <= M <= N");
  validate_scenario(sc);
  const std::int64_t b = sc.qstar.b();
  const std::int64_t c = sc.qstar.c();
  const auto lo = static_cast<std::int64_t>(std::ceil(sc.N));
  const auto hi = static_cast<std::int64_t>(std::floor(sc.Nprime));
  const auto x_max = static_cast<std::int64_t>(std::floor(sc.x_extent()));

  // integer y of I(x) for each x in J
  std::vector<std::vector<std::int64_t>> columns;
  for (std::int64_t x = 0; x <= x_max; ++x) {
    std::vector<std::int64_t> ys;
    const Interval branch = upper_branch(sc, static_cast<double>(x));
    for (auto y = static_cast<std::int64_t>(std::floor(branch.lo)) - 1;
         y <= static_cast<std::int64_t>(std::ceil(branch.hi)) + 1; ++y) {
      const std::int64_t q = sc.qstar(x, y);
      if (q >= lo && q <= hi && 2 * c * y + b * x >= 0) ys.push_back(y);
    }
    columns.push_back(std::move(ys));
  }

  WeylStepDiagnostic out;
  const double K = sc.K;
  const double N = sc.N;
  const double T = sc.T;
  for (std::int64_t m = 0; m <= M; ++m) {
    WeylStepRow row;
    row.m = m;
    const auto md = static_cast<double>(m);
    for (std::int64_t x = 0; x <= x_max; ++x) {
      const auto xd = static_cast<double>(x);
      Complex direct = 0.0;
      Complex linear = 0.0;
      for (const std::int64_t y : columns[static_cast<std::size_t>(x)]) {
        const auto yd = static_cast<double>(y);
        direct += e_unit(f_phase(sc, xd, yd + md) - f_phase(sc, xd, yd - md));
        linear += e_unit(2.0 * md * F_value(sc, xd, yd));
      }
      if (m == 0) {
        row.degenerate_error +=
            std::abs(direct - Complex(static_cast<double>(columns[static_cast<std::size_t>(x)].size()), 0.0));
      }
      row.discrepancy = std::max(row.discrepancy, std::abs(direct - linear));
    }
    row.remainder = md * std::pow(N, 1.5) * std::pow(K, 1.5) / (T * T) + md * md * md * std::sqrt(K) / std::sqrt(N);
    row.constant = row.remainder > 0.0 ? row.discrepancy / row.remainder : 0.0;
    out.max_constant = std::max(out.max_constant, row.constant);
    out.rows.push_back(row);
  }
  for (std::int64_t x = 0; x <= x_max; ++x) {
    for (const std::int64_t y : columns[static_cast<std::size_t>(x)]) {
      const double g3 = std::abs(g_third_derivative(sc, static_cast<double>(x), static_cast<double>(y)));
      out.g3_constant = std::max(out.g3_constant, g3 * N * T / std::sqrt(K));
    }
  }
  return out;
}

}  // namespace ezeta

namespace ezeta {

void WindowStat::add(double ratio) {
  if (!std::isfinite(ratio)) return;
  if (samples == 0) {
    lo = hi = ratio;
  } else {
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  ++samples;
}

WindowReport asymptotic_windows(const ExpSumScenario& sc, std::int64_t m_max) {
  require(m_max >= 1, ErrorKind::DomainError, "m_max must be positive");
  WindowReport out;
  out.f_second.name = "F''";
  out.f_second_all.name = "F'' incl. S_m(n)";
  out.g_second_prime.name = "G'' on J'_m";
  out.g_second_delta.name = "G'' on S_m(n,delta)";
  out.x_doubleprime.name = "x on J''_m";
  out.jm_length.name = "|J_m|";

  const double K = sc.K;
  const double N = sc.N;
  const double root_k = std::sqrt(K);
  const double root_n = std::sqrt(N);
  const auto x_max = static_cast<std::int64_t>(std::floor(sc.x_extent()));

  for (std::int64_t m = 1; m <= m_max; ++m) {
    const double md = static_cast<double>(m);
    const DomainSplit probe = domain_split(sc, m, 0);
    out.jm_length.add(probe.jm_ratio);
    const auto n_lo = static_cast<std::int64_t>(std::ceil(probe.Jm.lo));
    const auto n_hi = static_cast<std::int64_t>(std::floor(probe.Jm.hi));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      const DomainSplit split = domain_split(sc, m, n);
      if (split.empty) continue;
      const auto x_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(split.A)));
      const auto x_hi = std::min<std::int64_t>(x_max, static_cast<std::int64_t>(std::floor(split.B)));
      for (std::int64_t x = x_lo; x <= x_hi; ++x) {
        const auto xd = static_cast<double>(x);
        if (static_cast<double>(n) < 2.0 * md * a_of(sc, xd) || static_cast<double>(n) > 2.0 * md * b_of(sc, xd)) {
          continue;
        }
        double g2 = 0.0;
        try {
          g2 = g_second_derivative(sc, m, n, xd);
        } catch (const Error&) {
          continue;
        }
        if (split.in_Jm_prime) {
          out.g_second_prime.add(g2 * N / (md * root_k));
        } else if (split.in_Jm_doubleprime) {
          out.x_doubleprime.add(xd / root_n);
          const double f2 = std::abs(stationary_solve(sc, m, n, xd).fxx) * N / root_k;
          out.f_second_all.add(f2);
          for (const SplitPiece& piece : split.pieces) {
            if (piece.delta >= 1.0 && xd > piece.range.lo && xd <= piece.range.hi) {
              out.f_second.add(f2);
              out.g_second_delta.add(g2 * std::sqrt(piece.delta) * std::pow(N, 0.75) / (md * root_k));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace ezeta
