#include "ezeta/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

Complex stirling_series(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex acc = 0.0;
  for (std::size_t k = kStirling.size(); k-- > 0;) acc = acc * inv2 + kStirling[k];
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + acc * inv;
}

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

}  // namespace

Complex log_gamma(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail(ErrorKind::DomainError, "log_gamma of a non-finite argument");
  }
  if (is_nonpositive_integer(s)) {
    fail(ErrorKind::PoleAt, "Gamma has a pole at s = " + std::to_string(s.real()));
  }
  Complex z = s;
  Complex shift = 0.0;
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling_series(z) - shift;
}

Complex stirling_log_gamma(Complex s) {
  const double sigma = s.real();
  const double t = s.imag();
  require(t > 0.0, ErrorKind::DomainError, "stirling_log_gamma needs Im s > 0");
  const Complex i(0.0, 1.0);
  return kHalfLog2Pi + (s - 0.5) * std::log(t) - kPi * t / 2.0 + i * (kPi / 2.0 * (sigma - 0.5) - t);
}

double phi(double u) {
  require(u >= 0.0 && std::isfinite(u), ErrorKind::DomainError, "phi needs u >= 0");
  if (u < 1e-4) {
    // 2 sqrt(u) (1 + u/6 - u^2/40 + u^3/112)
    return 2.0 * std::sqrt(u) * (1.0 + u * (1.0 / 6.0 + u * (-1.0 / 40.0 + u / 112.0)));
  }
  return std::asinh(std::sqrt(u)) + std::sqrt(u + u * u);
}

double phi_derivatives(double u, int order) {
  require(u > 0.0 && std::isfinite(u), ErrorKind::DomainError, "phi derivatives need u > 0");
  switch (order) {
    case 1: return std::sqrt((1.0 + u) / u);
    case 2: return -0.5 / (u * std::sqrt(u) * std::sqrt(1.0 + u));
    case 3: {
      const double w = 1.0 + u;
      return (0.75 + u) / (u * u * std::sqrt(u) * w * std::sqrt(w));
    }
    default: fail(ErrorKind::DomainError, "phi derivative order must be 1, 2 or 3");
  }
}

Complex e_unit(double x) {
  require(std::isfinite(x), ErrorKind::DomainError, "e_unit of a non-finite argument");
  const double f = x - std::floor(x);
  const long quarter = std::lround(4.0 * f);
  const double r = f - 0.25 * static_cast<double>(quarter);
  const double c = std::cos(2.0 * kPi * r);
  const double s = std::sin(2.0 * kPi * r);
  switch (quarter & 3) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

PhaseReduced power_phase(std::int64_t n, double t) {
  require(n >= 1, ErrorKind::DomainError, "power_phase needs n >= 1");
  require(std::isfinite(t), ErrorKind::DomainError, "power_phase needs finite t");
  if (n == 1 || t == 0.0) return {0.0, 0.0};

  using quad = boost::multiprecision::cpp_bin_float_quad;
  static const quad two_pi = 2 * boost::math::constants::pi<quad>();
  const quad product = quad(t) * log(quad(n));
  const double magnitude = std::abs(product.convert_to<double>());
  // 113-bit rounding of ln n, the product and the reduction, then the final
  // conversion to double.
  const double guard = 8.0 * magnitude * std::ldexp(1.0, -112) + 2.0 * kPi * std::ldexp(1.0, -53);
  if (guard > 1e-10) {
    fail(ErrorKind::PrecisionExceeded, "phase t*ln(n) = " + std::to_string(magnitude) +
                                           " cannot be reduced to 1e-10");
  }
  quad reduced = product - floor(product / two_pi) * two_pi;
  double theta = reduced.convert_to<double>();
  if (theta >= 2.0 * kPi || theta < 0.0) theta = 0.0;
  return {theta, guard};
}

Complex unit_power(std::int64_t n, double t) {
  if (n == 1) return 1.0;
  const double ln = std::log(static_cast<double>(n));
  if (std::abs(t) * ln < 1e4) return std::polar(1.0, -t * ln);
  return std::polar(1.0, -power_phase(n, t).theta);
}

}  // namespace ezeta
