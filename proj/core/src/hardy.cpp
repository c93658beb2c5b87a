#include "ezeta/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectWidth = 1e-8;

double log_scale(const QuadraticForm& form) {
  return std::log(std::sqrt(static_cast<double>(form.delta())) / (2.0 * kPi));
}

bool positive(double w) { return w >= 0.0; }

ZeroRecord bisect(const QuadraticForm& form, double lo, double hi, double w_lo) {
  const bool s_lo = positive(w_lo);
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (positive(hardy_w(form, mid)) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double gamma = 0.5 * (lo + hi);
  return {lo, hi, gamma, std::abs(hardy_w(form, gamma))};
}

std::vector<ZeroRecord> scan_grid(const QuadraticForm& form, double t_from, double t_to,
                                  double step) {
  std::vector<ZeroRecord> zeros;
  const auto steps = static_cast<std::int64_t>(std::ceil((t_to - t_from) / step - 1e-9));
  double t_prev = t_from;
  double w_prev = hardy_w(form, t_prev);
  for (std::int64_t i = 1; i <= steps; ++i) {
    const double t = i == steps ? t_to : t_from + static_cast<double>(i) * step;
    const double w = hardy_w(form, t);
    if (positive(w) != positive(w_prev)) zeros.push_back(bisect(form, t_prev, t, w_prev));
    t_prev = t;
    w_prev = w;
  }
  return zeros;
}

void check_scan_range(double t_from, double t_to, double step) {
  require(std::isfinite(t_from) && std::isfinite(t_to) && t_from >= 2.0 && t_from < t_to,
          ErrorKind::ContractError, "scan range must satisfy 2 <= t_from < t_to");
  require(std::isfinite(step) && step > 0.0, ErrorKind::ContractError, "scan step must be positive");
}

}  // namespace

Complex gamma_factor(const QuadraticForm& form, Complex s) {
  const Complex i(0.0, 1.0);
  return std::exp(i * (kPi / 2.0) * (0.5 - s) + s * log_scale(form) + log_gamma(s));
}

double gamma_factor_stirling_modulus(const QuadraticForm& form, double /*t*/) {
  return std::pow(static_cast<double>(form.delta()), 0.25);
}

double gamma_factor_stirling_phase(const QuadraticForm& form, double t) {
  return t * (std::log(t) + log_scale(form)) - t;
}

HardyValue hardy_eval(const QuadraticForm& form, double t) {
  require(std::isfinite(t) && t >= 2.0, ErrorKind::DomainError, "W(t) is evaluated for t >= 2");
  const Complex s(0.5, t);
  const Complex g = gamma_factor(form, s);
  const EvalResult z = theta_continuation_eval(form, s);
  const Complex f = g * z.value;
  const double err = std::abs(g) * z.err_estimate;
  const double modulus = std::abs(f);
  if (std::abs(f.imag()) > 1e-8 * modulus + 10.0 * err) {
    fail(ErrorKind::PrecisionExceeded,
         "W(" + std::to_string(t) + ") has imaginary residual " + std::to_string(f.imag()));
  }
  return {f.real(), modulus > 0.0 ? f.imag() / modulus : 0.0, err};
}

double hardy_w(const QuadraticForm& form, double t) { return hardy_eval(form, t).w; }

HardyConfig HardyConfig::make(double T, double eps, std::optional<double> H) {
  require(std::isfinite(T) && T > 2.0, ErrorKind::DomainError, "HardyConfig needs T > 2");
  require(eps > 0.0 && eps < 1.0 / 14.0, ErrorKind::DomainError, "HardyConfig needs 0 < eps < 1/14");
  HardyConfig cfg;
  cfg.T = T;
  cfg.eps = eps;
  cfg.H = H.value_or(std::pow(T, 3.0 / 7.0 + eps));
  require(cfg.H >= std::pow(T, 3.0 * eps) && cfg.H <= std::sqrt(T), ErrorKind::DomainError,
          "HardyConfig needs T^{3 eps} <= H <= T^{1/2}");
  require(T - cfg.H >= 2.0, ErrorKind::DomainError, "HardyConfig needs T - H >= 2");
  cfg.H0 = cfg.H * std::pow(T, -eps);
  cfg.K = std::pow(T, 1.0 + 2.0 * eps) / cfg.H;
  return cfg;
}

HardyConfig HardyConfig::window(double T, double H, double H0) {
  require(std::isfinite(T) && H > 0.0 && H0 > 0.0 && H0 <= H, ErrorKind::DomainError,
          "window needs 0 < H0 <= H");
  require(T - H >= 2.0, ErrorKind::DomainError, "window needs T - H >= 2");
  HardyConfig cfg;
  cfg.T = T;
  cfg.H = H;
  cfg.H0 = H0;
  cfg.eps = std::log(H / H0) / std::log(T);
  cfg.K = std::pow(T, 1.0 + 2.0 * cfg.eps) / H;
  cfg.strict = false;
  return cfg;
}

WeightEta WeightEta::for_config(const QuadraticForm& form, const HardyConfig& cfg) {
  return {cfg.T * std::sqrt(static_cast<double>(form.delta())) / (2.0 * kPi), cfg.K};
}

double WeightEta::operator()(double x) const {
  const double d = std::abs(x - center);
  if (d <= K / 2.0) return 1.0;
  if (d >= K) return 0.0;
  return 0.5 * (1.0 + std::cos(kPi * (d - K / 2.0) / (K / 2.0)));
}

GaussianIntegral gaussian_integral(const QuadraticForm& form, const HardyConfig& cfg) {
  require(cfg.H > 0.0 && cfg.H0 > 0.0 && cfg.quad_tol > 0.0, ErrorKind::DomainError,
          "gaussian_integral needs H, H0 and the tolerance positive");
  const double lo = cfg.T - cfg.H;
  const double hi = cfg.T + cfg.H;
  const double step = std::min(default_scan_step(form, hi), cfg.H / 8.0);
  const std::vector<ZeroRecord> zeros = sign_change_scan(form, lo, hi, step);

  std::vector<double> cuts{lo};
  for (const ZeroRecord& z : zeros) cuts.push_back(z.gamma);
  cuts.push_back(hi);

  auto integrand = [&](double t) {
    const double u = (t - cfg.T) / cfg.H0;
    return hardy_w(form, t) * std::exp(-u * u);
  };

  GaussianIntegral out;
  out.quad_tol = cfg.quad_tol;
  out.sign_changes = zeros.size();
  const double piece_tol = cfg.quad_tol / static_cast<double>(cuts.size());
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    double error = 0.0;
    const double piece = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, cuts[j], cuts[j + 1], 10, 1e-11, &error);
    if (!(error <= piece_tol)) {
      fail(ErrorKind::QuadratureFailure, "Gauss-Kronrod error " + std::to_string(error) +
                                             " exceeds " + std::to_string(piece_tol));
    }
    out.I += piece;
    out.abs_integral += std::abs(piece);
  }
  out.deficit = out.abs_integral - std::abs(out.I);
  out.lower_ratio = std::abs(out.I) / cfg.H0;

  const WeightEta eta = WeightEta::for_config(form, cfg);
  if (eta.center + eta.K <= 1e6) {
    const auto n_hi = static_cast<std::int64_t>(std::floor(eta.center + eta.K));
    const auto n_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(eta.center - eta.K)));
    Complex sum = 0.0;
    if (n_hi >= 1) {
      const RepresentationTable table = representation_counts_upto(form, n_hi);
      for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        if (table[n] == 0) continue;
        const double nd = static_cast<double>(n);
        sum += eta(nd) * static_cast<double>(table[n]) / std::sqrt(nd) * unit_power(n, cfg.T);
      }
    }
    out.smooth_sum = sum;
  }
  return out;
}

double default_scan_step(const QuadraticForm& form, double t) {
  return kPi / (8.0 * std::max(1.0, std::log(t) + log_scale(form)));
}

std::vector<ZeroRecord> sign_change_scan(const QuadraticForm& form, double t_from, double t_to,
                                         double step) {
  check_scan_range(t_from, t_to, step);
  return scan_grid(form, t_from, t_to, step);
}

VerifiedScan sign_change_scan_verified(const QuadraticForm& form, double t_from, double t_to,
                                       double step) {
  check_scan_range(t_from, t_to, step);
  VerifiedScan out;
  out.zeros = scan_grid(form, t_from, t_to, step);
  out.half_step_count = scan_grid(form, t_from, t_to, step / 2.0).size();
  out.consistent = out.half_step_count == out.zeros.size();
  return out;
}

GapReport gap_report(const std::vector<double>& zeros, const std::vector<GapLaw>& laws) {
  require(zeros.size() >= 2, ErrorKind::ContractError, "gap_report needs at least two zeros");
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    require(zeros[i] > zeros[i - 1], ErrorKind::ContractError, "zeros must be strictly increasing");
  }
  GapReport report;
  report.zeros = zeros;
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    report.max_gap = std::max(report.max_gap, zeros[i] - zeros[i - 1]);
  }
  for (const GapLaw& law : laws) {
    LawCheck check;
    check.law = law;
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
      const double T = zeros[i];
      const double gap = zeros[i + 1] - T;
      double scale = std::pow(T, law.exponent);
      if (law.log_power != 0.0) scale *= std::pow(std::log(T), law.log_power);
      ++check.windows;
      if (gap <= law.constant * scale) {
        ++check.passes;
      } else if (!check.first_violation) {
        check.first_violation = T;
      }
      check.empirical_constant = std::max(check.empirical_constant, gap / scale);
    }
    report.law_checks.push_back(check);
  }
  return report;
}

}  // namespace ezeta
