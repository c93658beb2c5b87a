#include "ezeta/epstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-300;
constexpr int kMaxFractionTerms = 20000;
constexpr double kRotationMargin = 4.0;
constexpr double kTailExponent = 40.0;

bool near_nonpositive_integer(Complex z, double radius) {
  if (z.real() > radius) return false;
  const double nearest = std::min(0.0, std::round(z.real()));
  return std::abs(z - Complex(nearest, 0.0)) < radius;
}

// Gamma(z, w) / (w^z e^{-w}) from the Legendre continued fraction, modified
// Lentz evaluation.
Complex gamma_fraction(Complex z, Complex w) {
  Complex b = w + 1.0 - z;
  Complex c = 1.0 / kTiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= kMaxFractionTerms; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - z);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h;
  }
  fail(ErrorKind::PrecisionExceeded, "incomplete gamma continued fraction did not converge");
}

// sum_k w^k / (z)_{k+1}, so that gamma(z, w) = w^z e^{-w} * this.
Complex gamma_series(Complex z, Complex w) {
  Complex term = 1.0 / z;
  Complex sum = term;
  for (int k = 1; k <= kMaxFractionTerms; ++k) {
    term *= w / (z + static_cast<double>(k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  fail(ErrorKind::PrecisionExceeded, "incomplete gamma series did not converge");
}

// exp(scale) * int_{rot}^inf u^{z-1} e^{-q u} du, with rot on the unit circle
// and rot_pow = exp(scale) * rot^z supplied by the caller.
Complex upper_piece(Complex z, double q, Complex rot, Complex rot_pow, double scale) {
  const Complex w = q * rot;
  if (std::abs(w) >= std::abs(z) || near_nonpositive_integer(z, 0.25)) {
    return rot_pow * std::exp(-w) * gamma_fraction(z, w);
  }
  const Complex complete = std::exp(log_gamma(z) - z * std::log(q) + scale);
  return complete - rot_pow * std::exp(-w) * gamma_series(z, w);
}

struct ThetaSum {
  Complex lambda;     // Lambda(s) * exp(|t| |beta|)
  double magnitude;   // sum of the moduli of the pieces, same scale
  double beta;
};

ThetaSum theta_sum(const QuadraticForm& form, Complex s) {
  const double sigma = s.real();
  const double t = s.imag();
  const double at = std::abs(t);
  const double beta_abs = std::max(0.0, kPi / 2.0 - kRotationMargin / std::max(at, 1e-300));
  const double beta = t >= 0.0 ? beta_abs : -beta_abs;
  const double scale = at * beta_abs;
  const Complex i(0.0, 1.0);
  const Complex u0 = std::polar(1.0, beta);
  const Complex u0_inv = std::conj(u0);

  // u0^s e^{scale} and (1/u0)^{1-s} e^{scale}
  const Complex pow_a = std::exp(i * beta * sigma);
  const Complex pow_b = std::exp(-i * beta * (1.0 - sigma));

  const double kappa = form.density();
  const double cos_beta = std::cos(beta_abs);
  const double q_max =
      (kTailExponent + 2.0 * std::max({0.0, sigma - 1.0, -sigma})) / cos_beta;
  const auto n_max = std::max<std::int64_t>(1, static_cast<std::int64_t>(q_max / kappa) + 1);
  const RepresentationTable table = representation_counts_upto(form, n_max);

  Complex acc = 0.0;
  double magnitude = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto r = table[n];
    if (r == 0) continue;
    const double q = kappa * static_cast<double>(n);
    const Complex a = upper_piece(s, q, u0, pow_a, scale);
    const Complex b = upper_piece(1.0 - s, q, u0_inv, pow_b, scale);
    acc += static_cast<double>(r) * (a + b);
    magnitude += static_cast<double>(r) * (std::abs(a) + std::abs(b));
  }
  // u0^{s-1}/(s-1) - u0^s/s
  const Complex polar_part = std::exp(i * beta * (sigma - 1.0)) / (s - 1.0) - pow_a / s;
  acc += polar_part;
  magnitude += std::abs(polar_part);
  return {acc, magnitude, beta};
}

void check_finite(Complex s, const char* what) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail(ErrorKind::DomainError, std::string(what) + " needs a finite argument");
  }
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Direct: return "direct";
    case Method::Theta: return "theta";
    case Method::Approx: return "approx";
  }
  return "unknown";
}

ApproxParams ApproxParams::cubic(double t) {
  ApproxParams p;
  p.t = t;
  p.X = t * t * t;
  return p;
}

EvalResult dirichlet_series_eval(const QuadraticForm& form, Complex s, std::int64_t n_max) {
  check_finite(s, "dirichlet_series_eval");
  const double sigma = s.real();
  require(sigma > 1.0, ErrorKind::DomainError, "the Dirichlet series needs Re s > 1");
  require(n_max >= 1, ErrorKind::DomainError, "n_max must be positive");

  const RepresentationTable table = representation_counts_upto(form, n_max);
  Complex acc = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto r = table[n];
    if (r == 0) continue;
    const double nd = static_cast<double>(n);
    acc += static_cast<double>(r) * std::pow(nd, -sigma) * unit_power(n, s.imag());
  }

  const double kappa = form.density();
  const double big_n = static_cast<double>(n_max);
  const double remainder = static_cast<double>(table.cumulative(n_max)) - kappa * big_n;
  const double lattice = 2.0 * std::max(table.lattice_constant(), 1.0);
  double err = kappa * std::pow(big_n, 1.0 - sigma) / (sigma - 1.0) +
               std::abs(remainder) * std::pow(big_n, -sigma);
  if (sigma > 0.5) {
    err += std::abs(s) * lattice * std::pow(big_n, 0.5 - sigma) / (sigma - 0.5);
  }
  err += 1e-15 * std::abs(acc);
  return {acc, Method::Direct, err};
}

Complex completed_zeta_scaled(const QuadraticForm& form, Complex s) {
  check_finite(s, "completed_zeta_scaled");
  if (s == Complex(1.0, 0.0) || s == Complex(0.0, 0.0)) {
    fail(ErrorKind::PoleAt, "the completed function has poles at s = 0 and s = 1");
  }
  const ThetaSum sum = theta_sum(form, s);
  const double at = std::abs(s.imag());
  return sum.lambda * std::exp(at * (kPi / 2.0 - std::abs(sum.beta)));
}

EvalResult theta_continuation_eval(const QuadraticForm& form, Complex s) {
  check_finite(s, "theta_continuation_eval");
  if (s == Complex(1.0, 0.0)) fail(ErrorKind::PoleAt, "zeta_Q has a simple pole at s = 1");
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    // Lambda has simple poles at 0 only, Gamma at every nonpositive integer.
    return {s.real() == 0.0 ? Complex(-1.0, 0.0) : Complex(0.0, 0.0), Method::Theta, 0.0};
  }

  const ThetaSum sum = theta_sum(form, s);
  const double at = std::abs(s.imag());
  const double log_scale = std::log(std::sqrt(static_cast<double>(form.delta())) / (2.0 * kPi));
  const Complex factor = std::exp(-at * std::abs(sum.beta) - s * log_scale - log_gamma(s));
  const Complex value = sum.lambda * factor;
  const double err = 1e-15 * sum.magnitude * std::abs(factor) + 1e-14 * std::abs(value);
  return {value, Method::Theta, err};
}

EvalResult approx_eval(const QuadraticForm& form, Complex s, const ApproxParams& params) {
  check_finite(s, "approx_eval");
  const double t = s.imag();
  require(std::abs(s.real() - 0.5) <= 1e-12, ErrorKind::DomainError,
          "the approximate formula is stated on Re s = 1/2");
  require(t >= 2.0, ErrorKind::DomainError, "the approximate formula needs t >= 2");
  require(std::abs(params.t - t) <= 1e-12 * std::max(1.0, t), ErrorKind::DomainError,
          "ApproxParams.t does not match Im s");
  require(params.X >= t * t, ErrorKind::DomainError, "the approximate formula needs X >= t^2");
  require(params.X <= std::pow(t, 6.0), ErrorKind::DomainError,
          "the approximate formula needs X <= t^6");

  const double X = params.X;
  const auto n_sharp = static_cast<std::int64_t>(std::floor(X));
  const auto n_smooth = static_cast<std::int64_t>(std::floor(2.0 * X));
  const RepresentationTable table = representation_counts_upto(form, n_smooth);
  const double ln2 = std::numbers::ln2;

  Complex sharp = 0.0;
  Complex smooth = 0.0;
  for (std::int64_t n = 1; n <= n_smooth; ++n) {
    const auto r = table[n];
    if (r == 0) continue;
    const double nd = static_cast<double>(n);
    const Complex term = static_cast<double>(r) / std::sqrt(nd) * unit_power(n, t);
    if (n <= n_sharp) {
      sharp += term;
    } else {
      smooth += term * std::log(2.0 * X / nd);
    }
  }
  smooth /= ln2;

  const Complex one_minus_s = 1.0 - s;
  const Complex explicit_term = form.density() / ln2 / (one_minus_s * one_minus_s) *
                                (std::exp(one_minus_s * std::log(2.0 * X)) -
                                 std::exp(one_minus_s * std::log(X)));
  const Complex value = params.literal_sign ? sharp + smooth + explicit_term
                                            : sharp + smooth - explicit_term;
  return {value, Method::Approx, params.c_impl * t / std::sqrt(X)};
}

namespace {

// exp(pi |t| / 2) (sqrt(delta)/2pi)^s Gamma(s) zeta_Q(s)
Complex completed_from_zeta(const QuadraticForm& form, Complex s) {
  const double log_scale = std::log(std::sqrt(static_cast<double>(form.delta())) / (2.0 * kPi));
  const Complex zeta = theta_continuation_eval(form, s).value;
  return std::exp(s * log_scale + log_gamma(s) + kPi / 2.0 * std::abs(s.imag())) * zeta;
}

}  // namespace

double functional_equation_residual(const QuadraticForm& form, Complex s) {
  check_finite(s, "functional_equation_residual");
  const bool integer = s.imag() == 0.0 && s.real() == std::floor(s.real());
  if (integer) fail(ErrorKind::PoleAt, "Gamma(s) or Gamma(1-s) has a pole at an integer s");
  const Complex lhs = completed_from_zeta(form, s);
  const Complex rhs = completed_from_zeta(form, 1.0 - s);
  const double denom = std::abs(lhs) + std::abs(rhs);
  if (denom == 0.0) return 0.0;
  return std::abs(lhs - rhs) / denom;
}

}  // namespace ezeta
