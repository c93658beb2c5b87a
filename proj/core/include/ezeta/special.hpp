#pragma once

#include <complex>
#include <cstdint>

namespace ezeta {

using Complex = std::complex<double>;

/// Principal branch of log Gamma(s), continuous on C minus (-inf, 0].
/// Upward recurrence to Re >= 12 followed by the Stirling series with ten
/// Bernoulli terms.  Throws PoleAt at s = 0, -1, -2, ...
Complex log_gamma(Complex s);

/// Leading Stirling form log[(2 pi)^{1/2} t^{sigma+it-1/2} e^{-pi t/2 + i pi (sigma-1/2)/2 - it}]
/// for t = Im s > 0; the O(1/t) factor is dropped.
Complex stirling_log_gamma(Complex s);

/// phi(u) = arsinh(sqrt u) + sqrt(u + u^2), the phase profile of the
/// transformed lattice sum.  Below u = 1e-4 a four-term series is used
/// (relative truncation error < 1e-18).  Throws DomainError for u < 0.
double phi(double u);

/// phi', phi'', phi''' from the closed forms
///   phi'(u)   = sqrt((1+u)/u)
///   phi''(u)  = -1 / (2 u^{3/2} (1+u)^{1/2})
///   phi'''(u) = (3/4 + u) / (u^{5/2} (1+u)^{3/2}).
/// Throws DomainError for u <= 0 or order outside 1..3.
double phi_derivatives(double u, int order);

/// exp(2 pi i x), reduced modulo 1 and then to the nearest quarter turn, so
/// e(k/4) is exact for every integer k.
Complex e_unit(double x);

/// t * ln(n) reduced into [0, 2 pi).
struct PhaseReduced {
  double theta = 0.0;
  /// Bound on |theta - (t ln n mod 2 pi)|.
  double guard = 0.0;
};

/// Reduction carried out in 113-bit binary floating point.  Throws
/// PrecisionExceeded when the guard would exceed 1e-10.
PhaseReduced power_phase(std::int64_t n, double t);

/// n^{-it}.  Small phases use double precision directly; larger ones go
/// through power_phase.
Complex unit_power(std::int64_t n, double t);

}  // namespace ezeta
