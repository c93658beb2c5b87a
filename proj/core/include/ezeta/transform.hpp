#pragma once

// The Weyl-differenced and stationary-phase transformed forms of the lattice
// sum.  Notation, for a scenario with Q* = a x^2 + b x y + c y^2, |d| = 4ac - b^2,
// P = 2 pi h k delta0, kappa = sqrt(t/P):
//
//   F_x(y)   = (b x + 2 c y) (r + kappa Q*(x,y)^{-1/2})
//   F_x'(y)  = 2 c r + kappa |d| x^2 / (2 Q^{3/2})
//   F_x''(y) = -3 kappa |d| x^2 (b x + 2 c y) / (4 Q^{5/2})
//   a(x) = 2 c r + kappa |d| x^2 / (2 N'^{3/2})
//   b(x) = 2 c r + kappa |d| x^2 / (2 max(N, |d| x^2 / 4c)^{3/2})
//
// and for D = n - 4 c m r > 0, alpha = D^{2/3} |d|^{1/3}, M = m^{2/3} t^{1/3} / P^{1/3},
//
//   G_{m,n}(x) = 2 m F_x(y*) - n y* = b n x / (2c) + (4 c M - alpha x^{2/3})^{3/2} / (2c).
//
// All y are on the upper branch I(x) = {y : 2 c y + b x >= 0, N <= Q*(x,y) <= N'}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ezeta/scenario.hpp"

namespace ezeta {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi > lo ? hi - lo : 0.0; }
};

/// f_x(y) = Q*(x,y) r + (t/pi) phi(pi Q*(x,y) / (2 h k delta0 t)), real x, y.
double f_phase(const ExpSumScenario& sc, double x, double y);
/// g_x(y) = phi(pi Q*(x,y) / (2 h k delta0 t)) and its third y-derivative.
double g_third_derivative(const ExpSumScenario& sc, double x, double y);

double F_value(const ExpSumScenario& sc, double x, double y);
double F_prime(const ExpSumScenario& sc, double x, double y);
double F_second(const ExpSumScenario& sc, double x, double y);

double a_of(const ExpSumScenario& sc, double x);
double b_of(const ExpSumScenario& sc, double x);

/// The y-interval of I(x); empty when x is outside J.
Interval upper_branch(const ExpSumScenario& sc, double x);

struct StationaryData {
  std::int64_t m = 0;
  std::int64_t n = 0;
  double x = 0.0;
  double y_star = 0.0;
  double fxx = 0.0;
  double g_value = 0.0;
  double g_direct = 0.0;
  double g_closed = 0.0;
  double g_second = 0.0;
  double residual = 0.0;
};

/// Solves 2 m F_x'(y) = n on I(x) by bisection and evaluates G both as
/// 2 m F_x(y*) - n y* and from the closed form.  Throws NoStationaryPoint when
/// n lies outside [2 m a(x), 2 m b(x)] and PrecisionExceeded when the two
/// routes differ by more than 1e-9 relative.
StationaryData stationary_solve(const ExpSumScenario& sc, std::int64_t m, std::int64_t n, double x);

/// Closed form of G_{m,n}(x).
double g_closed_form(const ExpSumScenario& sc, std::int64_t m, std::int64_t n, double x);

/// G''_{m,n}(x) = alpha 4 c M / (6 c x^{4/3}) (4 c M - alpha x^{2/3})^{-1/2}.
/// Throws SingularPoint when the bracket is <= 1e-12 * 4 c M.
double g_second_derivative(const ExpSumScenario& sc, std::int64_t m, std::int64_t n, double x);

/// The expression
///   -alpha / (6 c x^{4/3}) (alpha x^{2/3} + 4 c M) (4 c M - alpha x^{2/3})^{-1/2}
/// which does not equal G'' (it has the opposite sign); kept for
/// side-by-side reporting.
double g_second_derivative_as_printed(const ExpSumScenario& sc, std::int64_t m, std::int64_t n,
                                      double x);

/// Singular point of G'': x0 = (4c)^{3/2} m kappa / (D sqrt|d|).
double singular_point(const ExpSumScenario& sc, std::int64_t m, std::int64_t n);

struct SplitPiece {
  /// 0 for S_m(n) = (x0 - 1, x0] intersected with [A, B], otherwise the delta
  /// of S_m(n, delta) = (x0 - 2 delta, x0 - delta] intersected with [A, B].
  double delta = 0.0;
  Interval range;
};

struct DomainSplit {
  std::int64_t m = 0;
  std::int64_t n = 0;
  double A = 0.0;
  double B = 0.0;
  double x0 = 0.0;
  Interval Jm;
  Interval Jm_prime;
  Interval Jm_doubleprime;
  bool in_Jm_prime = false;
  bool in_Jm_doubleprime = false;
  /// [A, B] contains no integer.
  bool empty = false;
  /// |J_m| / (m K^{1/2} N^{-1/2})
  double jm_ratio = 0.0;
  std::vector<double> delta_levels;
  std::vector<SplitPiece> pieces;
  /// The pieces cover [A, B] (only meaningful on J''_m).
  bool covers = false;
  /// Largest delta used, over sqrt(N).
  double delta_max_over_sqrt_n = 0.0;
};

DomainSplit domain_split(const ExpSumScenario& sc, std::int64_t m, std::int64_t n);

struct ReorderCheck {
  Complex lhs;
  Complex rhs;
  bool equal = false;
  double scale = 0.0;
  std::size_t terms = 0;
  std::int64_t n_lo = 0;
  std::int64_t n_hi = -1;
  /// Every n that occurs lies in J_m as defined by its closed-form ends.
  bool jm_covers = true;
  /// Every x that occurs for a given n lies in [A_m(n) - 1, B_m(n) + 1].
  bool ab_covers = true;
};

/// Both orders of summation of sum_x sum_n w e(G_{m,n}(x)),
/// w = 1 / sqrt(2 m |F_x''(y*)|), over integers 1 <= x in J.  Membership is
/// the primal predicate 2 m a(x) <= n <= 2 m b(x) on both sides.
ReorderCheck reorder_identity_check(const ExpSumScenario& sc, std::int64_t m);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  std::string str() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Exponent of T in K^{k_power} T^{t_power} when K = T^{k_exponent}.
struct ExponentIdentity {
  std::string label;
  Rational k_exponent;
  Rational k_power;
  Rational t_power;
  Rational result;
};

std::vector<ExponentIdentity> exponent_identities();

struct IntermediateBound {
  std::int64_t M = 0;
  double value = 0.0;
  /// |S_J|^2 / value with S_J the x >= 0, I(x) quadrant.
  double ratio = 0.0;
};

struct BoundReport {
  double raw_abs = 0.0;
  double quadrant_abs = 0.0;
  double normalized = 0.0;
  double trivial_bound = 0.0;
  double improved_bound = 0.0;
  double ratio_trivial = 0.0;
  double ratio_improved = 0.0;
  std::size_t points = 0;
  IntermediateBound trivial_choice;
  IntermediateBound improved_choice;
  std::vector<ExponentIdentity> identities;
};

BoundReport bound_report(const ExpSumScenario& sc);

/// M S^2-type right side
///   M N^{3/2} + N^2/M + M N^{5/2} K^{3/2}/T^2 + M^3 N^{1/2} K^{1/2} + N^2/(M^{1/2} K^{1/4}) + M N K^{1/2} log T.
double intermediate_bound(const ExpSumScenario& sc, std::int64_t M);

struct WeylStepRow {
  std::int64_t m = 0;
  /// max over x of |sum_y e(f(y+m) - f(y-m)) - sum_y e(2 m F_x(y))|
  double discrepancy = 0.0;
  /// m N^{3/2} K^{3/2} / T^2 + m^3 K^{1/2} / N^{1/2}
  double remainder = 0.0;
  double constant = 0.0;
  /// m = 0: sum_x |#I(x) - sum_y 1|, identically zero.
  double degenerate_error = 0.0;
};

struct WeylStepDiagnostic {
  std::vector<WeylStepRow> rows;
  double max_constant = 0.0;
  /// max over sampled (x, y) of |g'''_x(y)| N T / K^{1/2}
  double g3_constant = 0.0;
};

WeylStepDiagnostic weyl_step_diagnostic(const ExpSumScenario& sc, std::int64_t M);

/// Observed two-sided constants of one order-of-magnitude claim.
struct WindowStat {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t samples = 0;

  void add(double ratio);
  bool within(double c) const { return samples > 0 && lo >= 1.0 / c && hi <= c; }
};

struct WindowReport {
  /// |F_x''(y*)| N / K^{1/2} at the stationary points for n in J''_m, x in S_m(n, delta)
  WindowStat f_second;
  /// the same including x in S_m(n) next to the singular point, where F'' -> 0
  WindowStat f_second_all;
  /// G'' N / (m K^{1/2}) for n in J'_m, integer x in [A, B]
  WindowStat g_second_prime;
  /// G'' delta^{1/2} N^{3/4} / (m K^{1/2}) for n in J''_m, integer x in S_m(n, delta)
  WindowStat g_second_delta;
  /// x / N^{1/2} for n in J''_m, integer x in [A, B]
  WindowStat x_doubleprime;
  /// |J_m| / (m K^{1/2} N^{-1/2}), upper side only
  WindowStat jm_length;
};

/// Samples every claim for 1 <= m <= m_max.
WindowReport asymptotic_windows(const ExpSumScenario& sc, std::int64_t m_max);

}  // namespace ezeta
