#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ezeta/epstein.hpp"
#include "ezeta/qform.hpp"
#include "ezeta/special.hpp"

namespace ezeta {

/// gamma(s) = e^{i pi (1/2 - s)/2} (sqrt(delta)/2pi)^s Gamma(s), exact through
/// log_gamma.
Complex gamma_factor(const QuadraticForm& form, Complex s);

/// |gamma(1/2 + it)| from the leading Stirling term, Delta^{1/4} for every t.
double gamma_factor_stirling_modulus(const QuadraticForm& form, double t);

/// t log(t sqrt(delta)/2pi) - t, the leading phase of gamma(1/2 + it).
double gamma_factor_stirling_phase(const QuadraticForm& form, double t);

struct HardyValue {
  double w = 0.0;
  /// Im f / |f| with f = gamma * zeta at 1/2 + it.
  double imag_ratio = 0.0;
  /// Error bound on W inherited from the theta evaluation.
  double err = 0.0;
};

/// W(t) = gamma(1/2+it) zeta_Q(1/2+it), real for real t.  Throws
/// PrecisionExceeded when |Im f| exceeds 1e-8 |f| plus ten times the
/// propagated error of the evaluation.
HardyValue hardy_eval(const QuadraticForm& form, double t);
double hardy_w(const QuadraticForm& form, double t);

/// The parameter cluster of the Gaussian-weighted integral argument:
/// H0 = H T^{-eps}, K = T^{1+2 eps} / H.
struct HardyConfig {
  double T = 0.0;
  double H = 0.0;
  double eps = 0.05;
  double H0 = 0.0;
  double K = 0.0;
  /// Quadrature tolerance (absolute, per integral).
  double quad_tol = 1e-9;
  /// false for windows built by `window`, which skip T^{3 eps} <= H <= T^{1/2}.
  bool strict = true;

  /// Strict construction; H defaults to T^{3/7 + eps}.  Throws DomainError
  /// unless T^{3 eps} <= H <= T^{1/2}.
  static HardyConfig make(double T, double eps = 0.05, std::optional<double> H = std::nullopt);

  /// Short diagnostic window with free H and H0; eps is recovered from
  /// H0 = H T^{-eps}.
  static HardyConfig window(double T, double H, double H0);
};

/// Smooth weight: 1 on |x - center| <= K/2, 0 on |x - center| >= K, cosine
/// ramp in between.
struct WeightEta {
  double center = 0.0;
  double K = 0.0;

  static WeightEta for_config(const QuadraticForm& form, const HardyConfig& cfg);
  double operator()(double x) const;
};

struct GaussianIntegral {
  double I = 0.0;
  double abs_integral = 0.0;
  double deficit = 0.0;
  double lower_ratio = 0.0;
  double quad_tol = 0.0;
  /// Sign changes of W found inside [T - H, T + H] and used as breakpoints.
  std::size_t sign_changes = 0;
  /// sum eta(n) r(n) n^{-1/2 - iT}, when the support of eta is small enough
  /// to sum directly.
  std::optional<Complex> smooth_sum;
};

/// I = int_{-H}^{H} W(T+u) exp(-(u/H0)^2) du together with the integral of
/// |W| against the same weight.  Pieces between sign changes are integrated
/// separately by adaptive Gauss-Kronrod.
GaussianIntegral gaussian_integral(const QuadraticForm& form, const HardyConfig& cfg);

struct ZeroRecord {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double gamma = 0.0;
  double w_residual = 0.0;
};

/// pi / (8 max(1, log(t sqrt(delta) / 2pi))).
double default_scan_step(const QuadraticForm& form, double t);

/// Sign changes of W on the grid t_from + i*step, each bisected to width
/// <= 1e-8.  Throws ContractError unless 2 <= t_from < t_to and step > 0.
std::vector<ZeroRecord> sign_change_scan(const QuadraticForm& form, double t_from, double t_to,
                                         double step);

struct VerifiedScan {
  std::vector<ZeroRecord> zeros;
  /// The half-step rescan found the same number of sign changes.
  bool consistent = true;
  std::size_t half_step_count = 0;
};

VerifiedScan sign_change_scan_verified(const QuadraticForm& form, double t_from, double t_to,
                                       double step);

/// Window law: every [T, T + c T^e (log T)^p] with T in the span of the zeros
/// contains a zero.
struct GapLaw {
  double exponent = 0.5;
  double constant = 1.0;
  double log_power = 0.0;
  std::string name;
};

struct LawCheck {
  GapLaw law;
  std::size_t windows = 0;
  std::size_t passes = 0;
  /// max over gaps of gap / (T^e (log T)^p): the smallest constant that
  /// would pass.
  double empirical_constant = 0.0;
  std::optional<double> first_violation;
};

struct GapReport {
  std::vector<double> zeros;
  double max_gap = 0.0;
  std::vector<LawCheck> law_checks;
};

GapReport gap_report(const std::vector<double>& zeros, const std::vector<GapLaw>& laws);

}  // namespace ezeta
