#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ezeta/qform.hpp"
#include "ezeta/special.hpp"

namespace ezeta {

/// Two-sided comparability windows for the scenario invariants:
///   K/T <= c1 |1/sqrt(Delta) - h/k|,  c2 sqrt(T/K) <= h, k <= c3 sqrt(T/K),
///   c4 T <= t <= c5 T,  N <= c6 K.
struct Comparability {
  double c1 = 8.0;
  double c2 = 0.125;
  double c3 = 8.0;
  double c4 = 0.125;
  double c5 = 8.0;
  double c6 = 8.0;
};

/// Parameters of the lattice exponential sum
///   S = sum_{N <= Q*(x,y) <= N'} e(Q*(x,y) r + (t/pi) phi(pi Q*(x,y) / (2 h k delta0 t)))
/// with r = inv(h delta0 mod k)/k - 1/(2 h k delta0).
struct ExpSumScenario {
  QuadraticForm qstar{1, 0, 1};
  std::int64_t delta0 = 1;
  std::int64_t h = 1;
  std::int64_t k = 1;
  double t = 0.0;
  double T = 0.0;
  double K = 0.0;
  double N = 0.0;
  double Nprime = 0.0;
  std::int64_t Delta = 1;
  /// Derived by make_scenario.
  std::int64_t inverse = 0;
  double r = 0.0;
  Comparability constants;

  /// 2 pi h k delta0
  double P() const;
  /// sqrt(t / P), the amplitude in F_x.
  double kappa() const;
  /// pi / (2 h k delta0 t), the argument scale of phi.
  double phi_scale() const;
  /// 2 sqrt(c* N' / |d|), the right end of J.
  double x_extent() const;
};

/// Fills inverse and r, then validates.  Throws InvalidScenario naming the
/// first violated invariant.
ExpSumScenario make_scenario(const QuadraticForm& qstar, std::int64_t delta0, std::int64_t h,
                             std::int64_t k, double t, double T, double K, double N,
                             double Nprime, std::int64_t Delta, const Comparability& constants = {});

void validate_scenario(const ExpSumScenario& sc);

struct ScenarioRequest {
  double T = 1e4;
  double K = 0.0;
  std::int64_t Delta = 4;
  std::int64_t delta0 = 1;
  QuadraticForm qstar{1, 0, 1};
  double N = 64.0;
  double Nprime = 128.0;
  std::optional<double> t;
  Comparability constants;
};

/// Chooses (h, k) for the request: continued-fraction convergents of
/// 1/sqrt(Delta) first, then (when 1/sqrt(Delta) is rational or no
/// convergent fits) the smallest k, then h, in the admissible box.
ExpSumScenario build_scenario(const ScenarioRequest& request);

/// Desk family: T = 1e4, K = ceil(T^{4/7}), N <= 256, index 0..4.
ExpSumScenario desk_scenario(int index);
inline constexpr int kDeskScenarioCount = 5;

/// e(Q r + (t/pi) phi(pi Q / (2 h k delta0 t))) as a phase in [0, 1).
double lattice_phase(const ExpSumScenario& sc, std::int64_t q);

struct RawSum {
  Complex total;
  /// x >= 0 and x < 0, each split by the sign of 2 c* y + b* x (upper branch
  /// I(x) when nonnegative, lower branch I'(x) otherwise):
  /// [0] x>=0 I, [1] x>=0 I', [2] x<0 I, [3] x<0 I'.
  std::array<Complex, 4> quadrants{};
  std::size_t points = 0;
};

RawSum raw_double_sum(const ExpSumScenario& sc, std::int64_t capacity = kDefaultCapacity);

}  // namespace ezeta
