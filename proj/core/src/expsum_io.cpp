#include "ezeta/expsum_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <class T>
T field(const json& doc, const char* name) {
  if (!doc.contains(name)) fail(ErrorKind::InvalidScenario, std::string("missing field \"") + name + "\"");
  try {
    return doc.at(name).get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::InvalidScenario, std::string("field \"") + name + "\" has the wrong type");
  }
}

ordered_json constants_json(const Comparability& c) {
  return {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}, {"c5", c.c5}, {"c6", c.c6}};
}

Comparability constants_from(const json& doc) {
  Comparability c;
  if (!doc.contains("constants")) return c;
  const json& j = doc.at("constants");
  if (!j.is_object()) fail(ErrorKind::InvalidScenario, "\"constants\" must be an object");
  for (auto& [key, slot] : {std::pair{"c1", &c.c1}, std::pair{"c2", &c.c2}, std::pair{"c3", &c.c3},
                            std::pair{"c4", &c.c4}, std::pair{"c5", &c.c5}, std::pair{"c6", &c.c6}}) {
    if (j.contains(key)) *slot = field<double>(j, key);
  }
  return c;
}

ordered_json interm_json(const IntermediateBound& b) { return {{"M", b.M}, {"value", b.value}, {"ratio", b.ratio}}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ExpSumScenario scenario_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidScenario, std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::InvalidScenario, "scenario must be a JSON object");
  const auto q = field<std::vector<std::int64_t>>(doc, "qstar");
  if (q.size() != 3) fail(ErrorKind::InvalidScenario, "\"qstar\" must hold three integers");
  QuadraticForm form = [&] {
    try {
      return QuadraticForm(q[0], q[1], q[2]);
    } catch (const Error& e) {
      fail(ErrorKind::InvalidScenario, std::string("qstar: ") + e.what());
    }
  }();
  ExpSumScenario sc = make_scenario(form, field<std::int64_t>(doc, "delta0"), field<std::int64_t>(doc, "h"),
                                    field<std::int64_t>(doc, "k"), field<double>(doc, "t"),
                                    field<double>(doc, "T"), field<double>(doc, "K"), field<double>(doc, "N"),
                                    field<double>(doc, "Nprime"), field<std::int64_t>(doc, "Delta"),
                                    constants_from(doc));
  if (doc.contains("r")) {
    const double r = field<double>(doc, "r");
    if (std::abs(r - sc.r) > 1e-12 * std::max(1.0, std::abs(sc.r))) {
      fail(ErrorKind::InvalidScenario, "\"r\" = " + num(r) + " does not match derived " + num(sc.r));
    }
  }
  return sc;
}

std::string scenario_to_json(const ExpSumScenario& sc) {
  ordered_json doc = {{"qstar", {sc.qstar.a(), sc.qstar.b(), sc.qstar.c()}},
              {"delta0", sc.delta0},
              {"h", sc.h},
              {"k", sc.k},
              {"t", sc.t},
              {"T", sc.T},
              {"K", sc.K},
              {"N", sc.N},
              {"Nprime", sc.Nprime},
              {"Delta", sc.Delta},
              {"r", sc.r},
              {"constants", constants_json(sc.constants)}};
  return doc.dump(2);
}

std::string bound_report_json(const BoundReport& report, int indent) {
  ordered_json ids = ordered_json::array();
  for (const auto& id : report.identities) {
    ids.push_back({{"label", id.label},
                   {"k_exponent", id.k_exponent.str()},
                   {"k_power", id.k_power.str()},
                   {"t_power", id.t_power.str()},
                   {"t_exponent", id.result.str()}});
  }
  ordered_json doc = {{"raw_abs", report.raw_abs},
              {"quadrant_abs", report.quadrant_abs},
              {"normalized", report.normalized},
              {"trivial_bound", report.trivial_bound},
              {"improved_bound", report.improved_bound},
              {"ratio_trivial", report.ratio_trivial},
              {"ratio_improved", report.ratio_improved},
              {"points", report.points},
              {"trivial_choice", interm_json(report.trivial_choice)},
              {"improved_choice", interm_json(report.improved_choice)},
              {"identities", ids}};
  return doc.dump(indent);
}

std::string bound_report_csv_header() {
  return "raw_abs,quadrant_abs,normalized,trivial_bound,improved_bound,ratio_trivial,ratio_improved,points,"
         "M_trivial,intermediate_trivial,M_improved,intermediate_improved";
}

std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << num(r.raw_abs) << ',' << num(r.quadrant_abs) << ',' << num(r.normalized) << ','
      << num(r.trivial_bound) << ',' << num(r.improved_bound) << ',' << num(r.ratio_trivial) << ','
      << num(r.ratio_improved) << ',' << r.points << ',' << r.trivial_choice.M << ','
      << num(r.trivial_choice.value) << ',' << r.improved_choice.M << ',' << num(r.improved_choice.value);
  return out.str();
}

}  // namespace ezeta
