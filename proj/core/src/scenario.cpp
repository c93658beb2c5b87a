#include "ezeta/scenario.hpp"

#include <cmath>
#include <numeric>
#include <numbers>
#include <optional>
#include <string>

#include "ezeta/error.hpp"

namespace ezeta {

__extension__ typedef __int128 i128;

namespace {

constexpr double kPi = std::numbers::pi;

std::optional<std::int64_t> modular_inverse(std::int64_t v, std::int64_t mod) {
  if (mod == 1) return 0;
  std::int64_t r0 = mod;
  std::int64_t r1 = ((v % mod) + mod) % mod;
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) return std::nullopt;
  return ((s0 % mod) + mod) % mod;
}

std::optional<std::string> first_violation(const ExpSumScenario& sc) {
  const Comparability& c = sc.constants;
  if (sc.delta0 < 1 || sc.h < 1 || sc.k < 1 || sc.Delta < 1) {
    return "positivity: delta0, h, k and Delta must be positive integers";
  }
  if (!(std::isfinite(sc.T) && std::isfinite(sc.K) && std::isfinite(sc.t) && sc.T > 1.0 &&
        sc.K >= 1.0 && sc.K < sc.T)) {
    return "ranges: need 1 <= K < T and finite t";
  }
  if (sc.Delta % sc.delta0 != 0) return "divisibility: delta0 must divide Delta";
  if (sc.qstar.delta() > sc.Delta) return "discriminant: |d| of Q* must not exceed Delta";
  if (std::gcd(sc.h * sc.delta0, sc.k) != 1) {
    return "coprimality: gcd(h*delta0, k) = " + std::to_string(std::gcd(sc.h * sc.delta0, sc.k)) +
           " must be 1";
  }
  const double gap = std::abs(1.0 / std::sqrt(static_cast<double>(sc.Delta)) -
                              static_cast<double>(sc.h) / static_cast<double>(sc.k));
  if (sc.K / sc.T > c.c1 * gap) return "approximation window: K/T <= c1 |1/sqrt(Delta) - h/k|";
  if (gap > kPi * sc.K / (sc.T * static_cast<double>(sc.Delta))) {
    return "approximation window: |1/sqrt(Delta) - h/k| <= pi K / (T Delta)";
  }
  const double root = std::sqrt(sc.T / sc.K);
  for (const std::int64_t v : {sc.h, sc.k}) {
    const double vd = static_cast<double>(v);
    if (vd < c.c2 * root || vd > c.c3 * root) return "size: c2 sqrt(T/K) <= h, k <= c3 sqrt(T/K)";
  }
  if (sc.t < c.c4 * sc.T || sc.t > c.c5 * sc.T) return "size: c4 T <= t <= c5 T";
  if (!(sc.N >= 1.0 && sc.N <= sc.Nprime && sc.Nprime <= 2.0 * sc.N)) {
    return "annulus: 1 <= N <= N' <= 2N";
  }
  if (sc.N > c.c6 * sc.K) return "annulus: N <= c6 K";
  return std::nullopt;
}

ExpSumScenario assemble(const QuadraticForm& qstar, std::int64_t delta0, std::int64_t h,
                        std::int64_t k, double t, double T, double K, double N, double Nprime,
                        std::int64_t Delta, const Comparability& constants) {
  ExpSumScenario sc;
  sc.qstar = qstar;
  sc.delta0 = delta0;
  sc.h = h;
  sc.k = k;
  sc.t = t;
  sc.T = T;
  sc.K = K;
  sc.N = N;
  sc.Nprime = Nprime;
  sc.Delta = Delta;
  sc.constants = constants;
  if (h >= 1 && k >= 1 && delta0 >= 1) {
    if (const auto inv = modular_inverse(h * delta0, k)) {
      sc.inverse = *inv;
      sc.r = static_cast<double>(sc.inverse) / static_cast<double>(k) -
             1.0 / (2.0 * static_cast<double>(h) * static_cast<double>(k) * static_cast<double>(delta0));
    }
  }
  return sc;
}

}  // namespace

double ExpSumScenario::P() const {
  return 2.0 * kPi * static_cast<double>(h) * static_cast<double>(k) * static_cast<double>(delta0);
}

double ExpSumScenario::kappa() const { return std::sqrt(t / P()); }

double ExpSumScenario::phi_scale() const {
  return kPi / (2.0 * static_cast<double>(h) * static_cast<double>(k) *
                static_cast<double>(delta0) * t);
}

double ExpSumScenario::x_extent() const {
  return 2.0 * std::sqrt(static_cast<double>(qstar.c()) * Nprime /
                         static_cast<double>(qstar.delta()));
}

void validate_scenario(const ExpSumScenario& sc) {
  if (const auto why = first_violation(sc)) fail(ErrorKind::InvalidScenario, *why);
}

ExpSumScenario make_scenario(const QuadraticForm& qstar, std::int64_t delta0, std::int64_t h,
                             std::int64_t k, double t, double T, double K, double N,
                             double Nprime, std::int64_t Delta, const Comparability& constants) {
  ExpSumScenario sc = assemble(qstar, delta0, h, k, t, T, K, N, Nprime, Delta, constants);
  validate_scenario(sc);
  return sc;
}

ExpSumScenario build_scenario(const ScenarioRequest& req) {
  const double K = req.K > 0.0 ? req.K : std::ceil(std::pow(req.T, 4.0 / 7.0));
  const double t = req.t.value_or(req.T);
  auto attempt = [&](std::int64_t h, std::int64_t k) {
    return assemble(req.qstar, req.delta0, h, k, t, req.T, K, req.N, req.Nprime, req.Delta,
                    req.constants);
  };

  // convergents of 1/sqrt(Delta)
  double x = 1.0 / std::sqrt(static_cast<double>(req.Delta));
  std::int64_t p_prev = 1, p = 0, q_prev = 0, q = 1;
  for (int i = 0; i < 24; ++i) {
    const double a_d = std::floor(x);
    if (a_d > 1e9) break;
    const auto a = static_cast<std::int64_t>(a_d);
    const std::int64_t p_next = a * p + p_prev;
    const std::int64_t q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    if (p >= 1) {
      ExpSumScenario sc = attempt(p, q);
      if (!first_violation(sc)) return sc;
    }
    const double frac = x - a_d;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }

  const double root = std::sqrt(req.T / K);
  const auto lo = static_cast<std::int64_t>(std::ceil(req.constants.c2 * root));
  const auto hi = static_cast<std::int64_t>(std::floor(req.constants.c3 * root));
  for (std::int64_t k = std::max<std::int64_t>(1, lo); k <= hi; ++k) {
    for (std::int64_t h = std::max<std::int64_t>(1, lo); h <= hi; ++h) {
      ExpSumScenario sc = attempt(h, k);
      if (!first_violation(sc)) return sc;
    }
  }
  fail(ErrorKind::InvalidScenario, "no (h, k) satisfies the approximation window for this request");
}

ExpSumScenario desk_scenario(int index) {
  ScenarioRequest req;
  req.T = 1e4;
  switch (index) {
    case 0: req.N = 64; req.Nprime = 128; break;
    case 1: req.N = 128; req.Nprime = 256; break;
    case 2:
      req.Delta = 3;
      req.qstar = QuadraticForm(1, 1, 1);
      req.N = 64;
      req.Nprime = 128;
      break;
    case 3:
      req.Delta = 3;
      req.qstar = QuadraticForm(1, 1, 1);
      req.N = 194;
      req.Nprime = 388;
      break;
    case 4:
      req.Delta = 8;
      req.delta0 = 2;
      req.qstar = QuadraticForm(1, 0, 2);
      req.N = 100;
      req.Nprime = 200;
      break;
    default: fail(ErrorKind::DomainError, "desk scenario index must be 0..4");
  }
  return build_scenario(req);
}

double lattice_phase(const ExpSumScenario& sc, std::int64_t q) {
  const auto k = static_cast<i128>(sc.k);
  const auto twice = static_cast<i128>(2) * sc.h * sc.k * sc.delta0;
  const auto residue = static_cast<std::int64_t>((static_cast<i128>(q) * sc.inverse) % k);
  const auto shifted = static_cast<std::int64_t>(static_cast<i128>(q) % twice);
  long double phase = static_cast<long double>(residue) / static_cast<long double>(sc.k) -
                      static_cast<long double>(shifted) / static_cast<long double>(twice);
  const double u = sc.phi_scale() * static_cast<double>(q);
  phase += static_cast<long double>(sc.t) / std::numbers::pi_v<long double> *
           static_cast<long double>(phi(u));
  phase -= std::floor(phase);
  return static_cast<double>(phase);
}

RawSum raw_double_sum(const ExpSumScenario& sc, std::int64_t capacity) {
  validate_scenario(sc);
  const std::vector<LatticePoint> points = enumerate_annulus(sc.qstar, sc.N, sc.Nprime, capacity);
  RawSum out;
  out.points = points.size();
  const std::int64_t b = sc.qstar.b();
  const std::int64_t c = sc.qstar.c();
  for (const LatticePoint& p : points) {
    const Complex term = e_unit(lattice_phase(sc, p.value));
    const bool upper = 2 * c * p.y + b * p.x >= 0;
    const std::size_t slot = (p.x >= 0 ? 0 : 2) + (upper ? 0 : 1);
    out.quadrants[slot] += term;
  }
  for (const Complex& q : out.quadrants) out.total += q;
  return out;
}

}  // namespace ezeta
