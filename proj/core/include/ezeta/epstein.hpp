#pragma once

#include <cstdint>
#include <string_view>

#include "ezeta/qform.hpp"
#include "ezeta/special.hpp"

namespace ezeta {

enum class Method { Direct, Theta, Approx };

std::string_view to_string(Method method) noexcept;

struct EvalResult {
  Complex value;
  Method method = Method::Direct;
  double err_estimate = 0.0;
};

/// Cutoff parameters of the approximate formula
///   zeta_Q(s) ~ sum_{n<=X} r(n) n^-s + (log 2)^-1 sum_{X<n<=2X} r(n) n^-s log(2X/n)
///               - (log 2)^-1 (2 pi / sqrt(delta)) (1-s)^-2 ((2X)^{1-s} - X^{1-s})
/// on Re s = 1/2 with t^2 <= X <= t^6.
struct ApproxParams {
  double X = 0.0;
  double t = 0.0;
  /// Error estimate reported as c_impl * t * X^{-1/2}.
  double c_impl = 1.0;
  /// Add the last term instead of subtracting it.  Kept only to document
  /// that this variant does not converge to zeta_Q.
  bool literal_sign = false;

  /// X = t^3.
  static ApproxParams cubic(double t);
};

/// Truncated Dirichlet series for Re s > 1.  The tail is bounded through the
/// lattice-point remainder E(x) = sum_{n<=x} r(n) - 2 pi x / sqrt(delta),
/// measured on [1, n_max] and inflated by a factor 2 beyond it.
EvalResult dirichlet_series_eval(const QuadraticForm& form, Complex s, std::int64_t n_max);

/// Analytic continuation through the theta transformation
///   Lambda(s) = sum r(n) [ int_{u0}^inf u^{s-1} e^{-qu} du + int_{1/u0}^inf u^{-s} e^{-qu} du ]
///               + u0^{s-1}/(s-1) - u0^s/s,        q = 2 pi n / sqrt(delta),
/// where Lambda(s) = (sqrt(delta)/2pi)^s Gamma(s) zeta_Q(s).  The split point
/// u0 = e^{i beta} is rotated towards the imaginary axis for large |t| so the
/// e^{-pi |t|/2} decay of Gamma is matched term by term instead of recovered
/// by cancellation.  Valid for |Im s| up to a few thousand.
EvalResult theta_continuation_eval(const QuadraticForm& form, Complex s);

/// Lambda(s) * exp(pi |t| / 2), finite for large |t|.
Complex completed_zeta_scaled(const QuadraticForm& form, Complex s);

EvalResult approx_eval(const QuadraticForm& form, Complex s, const ApproxParams& params);

/// |Lambda(s) - Lambda(1-s)| / (|Lambda(s)| + |Lambda(1-s)|).
double functional_equation_residual(const QuadraticForm& form, Complex s);

}  // namespace ezeta
