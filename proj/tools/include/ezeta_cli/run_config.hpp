#pragma once

#include <cstdint>
#include <string>

#include "ezeta/scenario.hpp"

namespace ezeta::cli {

/// Defaults shared by every subcommand.  Loaded from the JSON file named by
/// EZETA_CONFIG (or --config), then overridden by flags.
struct RunConfig {
  std::uint64_t seed = 7;
  std::int64_t direct_n_max = 1000000;
  double approx_c_impl = 1.0;
  double quad_tol = 1e-9;
  /// 0 selects the density-based default step.
  double scan_step = 0.0;
  std::size_t trials = 1000;
  std::int64_t m_max = 8;
  double window_constant = 50.0;
  double reorder_tol = 1e-10;
  Comparability constants;
  /// Empty writes to standard output.
  std::string output;

  /// Throws ConfigError on unknown keys, wrong types or non-positive tolerances.
  static RunConfig from_json(const std::string& text);
  static RunConfig load_file(const std::string& path);
  void validate() const;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ezeta::cli
