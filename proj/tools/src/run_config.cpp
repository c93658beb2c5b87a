#include "ezeta_cli/run_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ezeta::cli {

namespace {

using nlohmann::json;

template <class T>
void take(const json& doc, const char* key, T& slot) {
  if (!doc.contains(key)) return;
  try {
    slot = doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key \"") + key + "\" has the wrong type");
  }
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static const char* const kKeys[] = {"seed",   "direct_n_max",    "approx_c_impl", "quad_tol",
                                      "scan_step", "trials",       "m_max",         "window_constant",
                                      "reorder_tol", "constants",  "output"};
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ConfigError("unknown config key \"" + key + "\"");
  }
  RunConfig cfg;
  take(doc, "seed", cfg.seed);
  take(doc, "direct_n_max", cfg.direct_n_max);
  take(doc, "approx_c_impl", cfg.approx_c_impl);
  take(doc, "quad_tol", cfg.quad_tol);
  take(doc, "scan_step", cfg.scan_step);
  take(doc, "trials", cfg.trials);
  take(doc, "m_max", cfg.m_max);
  take(doc, "window_constant", cfg.window_constant);
  take(doc, "reorder_tol", cfg.reorder_tol);
  take(doc, "output", cfg.output);
  if (doc.contains("constants")) {
    const json& c = doc.at("constants");
    if (!c.is_object()) throw ConfigError("config key \"constants\" must be an object");
    take(c, "c1", cfg.constants.c1);
    take(c, "c2", cfg.constants.c2);
    take(c, "c3", cfg.constants.c3);
    take(c, "c4", cfg.constants.c4);
    take(c, "c5", cfg.constants.c5);
    take(c, "c6", cfg.constants.c6);
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return from_json(text.str());
}

void RunConfig::validate() const {
  if (!(quad_tol > 0.0)) throw ConfigError("quad_tol must be positive");
  if (!(approx_c_impl > 0.0)) throw ConfigError("approx_c_impl must be positive");
  if (!(reorder_tol > 0.0)) throw ConfigError("reorder_tol must be positive");
  if (!(window_constant >= 1.0)) throw ConfigError("window_constant must be at least 1");
  if (scan_step < 0.0) throw ConfigError("scan_step must be nonnegative");
  if (direct_n_max < 1) throw ConfigError("direct_n_max must be positive");
  if (m_max < 1) throw ConfigError("m_max must be positive");
  if (trials < 1) throw ConfigError("trials must be positive");
  for (double c : {constants.c1, constants.c2, constants.c3, constants.c4, constants.c5, constants.c6}) {
    if (!(c > 0.0)) throw ConfigError("comparability constants must be positive");
  }
}

}  // namespace ezeta::cli
