#pragma once

// Independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

/// Hurwitz zeta(s, a) by Euler-Maclaurin with 40 explicit terms and 12
/// Bernoulli corrections; good to ~1e-14 for |Im s| <= 60, Re s > -10.
inline C hurwitz(C s_in, long double a) {
  using L = std::complex<long double>;
  static const long double kB2k[] = {1.0L / 6,       -1.0L / 30,       1.0L / 42,          -1.0L / 30,
                                     5.0L / 66,      -691.0L / 2730,   7.0L / 6,           -3617.0L / 510,
                                     43867.0L / 798, -174611.0L / 330, 854513.0L / 138,    -236364091.0L / 2730};
  const L s(s_in.real(), s_in.imag());
  constexpr int N = 40;
  L sum = 0.0L;
  for (int n = 0; n < N; ++n) sum += std::pow(L(n + a), -s);
  const long double x = N + a;
  sum += std::pow(L(x), 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(L(x), -s);
  L rising = s;  // s (s+1) ... (s+2k-2)
  long double fact = 2.0L;  // (2k)!
  for (int k = 1; k <= 12; ++k) {
    sum += kB2k[k - 1] / fact * rising * std::pow(L(x), -s - 2.0L * k + 1.0L);
    rising *= (s + 2.0L * k - 1.0L) * (s + 2.0L * k);
    fact *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
  }
  return C(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

inline C riemann_zeta(C s) { return hurwitz(s, 1.0L); }
inline C l_chi4(C s) { return std::pow(4.0, -s) * (hurwitz(s, 0.25L) - hurwitz(s, 0.75L)); }
inline C l_chi3(C s) { return std::pow(3.0, -s) * (hurwitz(s, 1.0L / 3.0L) - hurwitz(s, 2.0L / 3.0L)); }

/// zeta of x^2 + y^2 and of x^2 + x y + y^2 through their factorizations.
inline C epstein_101(C s) { return 4.0 * riemann_zeta(s) * l_chi4(s); }
inline C epstein_111(C s) { return 6.0 * riemann_zeta(s) * l_chi3(s); }

/// log Gamma by shifting to Re >= 15 and an eight-term Stirling series.
inline C lgamma(C z) {
  C shift = 0.0;
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  static const double kCoef[] = {1.0 / 12,    -1.0 / 360,     1.0 / 1260,      -1.0 / 1680,
                                 1.0 / 1188,  -691.0 / 360360, 1.0 / 156,      -3617.0 / 122400};
  C series = 0.0;
  C zp = 1.0 / z;
  const C z2 = zp * zp;
  for (double c : kCoef) {
    series += c * zp;
    zp *= z2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

/// Real Hardy Z-functions of zeta and of L(s, chi_4) on the critical line.
inline double hardy_z_zeta(double t) {
  const double theta = lgamma(C(0.25, t / 2.0)).imag() - t / 2.0 * std::log(kPi);
  return (std::exp(C(0.0, theta)) * riemann_zeta(C(0.5, t))).real();
}
inline double hardy_z_chi4(double t) {
  const double theta = lgamma(C(0.75, t / 2.0)).imag() + t / 2.0 * std::log(4.0 / kPi);
  return (std::exp(C(0.0, theta)) * l_chi4(C(0.5, t))).real();
}

/// Sign changes of f on a grid, bisected to width 1e-11.
inline std::vector<double> scan_zeros(const std::function<double(double)>& f, double lo, double hi,
                                      double step) {
  std::vector<double> out;
  double a = lo;
  double fa = f(a);
  while (a < hi) {
    const double b = std::min(a + step, hi);
    const double fb = f(b);
    if ((fa < 0.0) != (fb < 0.0)) {
      double l = a, r = b, fl = fa;
      while (r - l > 1e-11) {
        const double m = 0.5 * (l + r);
        const double fm = f(m);
        if ((fm < 0.0) == (fl < 0.0)) {
          l = m;
          fl = fm;
        } else {
          r = m;
        }
      }
      out.push_back(0.5 * (l + r));
    }
    a = b;
    fa = fb;
  }
  return out;
}

/// r_Q(n) by brute force over a box.
inline std::int64_t brute_reps(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
  const std::int64_t d = 4 * a * c - b * b;
  const auto xm = static_cast<std::int64_t>(std::sqrt(4.0 * c * n / d)) + 2;
  const auto ym = static_cast<std::int64_t>(std::sqrt(4.0 * a * n / d)) + 2;
  std::int64_t count = 0;
  for (std::int64_t x = -xm; x <= xm; ++x) {
    for (std::int64_t y = -ym; y <= ym; ++y) {
      if (a * x * x + b * x * y + c * y * y == n) ++count;
    }
  }
  return count;
}

}  // namespace oracle
