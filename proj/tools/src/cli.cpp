#include "ezeta_cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ezeta/epstein.hpp"
#include "ezeta/error.hpp"
#include "ezeta/expsum_io.hpp"
#include "ezeta/hardy.hpp"
#include "ezeta/lemmas.hpp"
#include "ezeta/transform.hpp"
#include "ezeta_cli/run_config.hpp"

namespace ezeta::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from \"" + text + "\"");
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("cannot parse " + what + " from \"" + text + "\"");
  return v;
}

QuadraticForm parse_form(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("--form expects a,b,c");
  std::int64_t c[3];
  for (int i = 0; i < 3; ++i) {
    const double v = parse_double(parts[static_cast<std::size_t>(i)], "form coefficient");
    if (v != std::floor(v) || std::abs(v) > 1e15) throw UsageError("form coefficients must be integers");
    c[i] = static_cast<std::int64_t>(v);
  }
  return QuadraticForm(c[0], c[1], c[2]);
}

Complex parse_s(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.empty() || parts.size() > 2) throw UsageError("--s expects sigma,t");
  const double sigma = parse_double(parts[0], "sigma");
  const double t = parts.size() == 2 ? parse_double(parts[1], "t") : 0.0;
  return {sigma, t};
}

std::vector<GapLaw> parse_laws(const std::vector<std::string>& specs) {
  std::vector<GapLaw> laws;
  for (const auto& spec : specs) {
    for (const auto& item : split(spec, ',')) {
      const auto parts = split(item, ':');
      if (parts.size() < 2 || parts.size() > 3) throw UsageError("--laws expects e:c or e:c:p, got \"" + item + "\"");
      GapLaw law;
      law.exponent = parse_double(parts[0], "law exponent");
      law.constant = parse_double(parts[1], "law constant");
      law.log_power = parts.size() == 3 ? parse_double(parts[2], "law log power") : 0.0;
      if (!(law.constant > 0.0)) throw UsageError("law constants must be positive");
      law.name = item;
      laws.push_back(law);
    }
  }
  return laws;
}

std::vector<GapLaw> default_laws() {
  return {{0.5, 1.0, 1.0, "T^1/2 log T"}, {5.0 / 11.0, 1.0, 0.0, "T^5/11"}, {3.0 / 7.0, 1.0, 0.0, "T^3/7"}};
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json window_json(const WindowStat& w, double c) {
  return {{"name", w.name}, {"samples", w.samples}, {"lo", w.lo},   {"hi", w.hi},
          {"constant", c},  {"pass", w.within(c)}};
}

// ---- eval -----------------------------------------------------------------

struct EvalOptions {
  std::string form;
  std::string s;
  std::string methods = "theta";
  std::string X = "auto";
  std::optional<std::int64_t> n_max;
};

void cmd_eval(const EvalOptions& o, const RunConfig& cfg, std::ostream& out) {
  const Complex s = parse_s(o.s);
  std::vector<Method> methods;
  for (const auto& m : split(o.methods, ',')) {
    if (m == "direct") {
      methods.push_back(Method::Direct);
    } else if (m == "theta") {
      methods.push_back(Method::Theta);
    } else if (m == "approx") {
      methods.push_back(Method::Approx);
    } else {
      throw UsageError("unknown method \"" + m + "\"");
    }
  }
  std::optional<double> X;
  if (o.X != "auto") X = parse_double(o.X, "X");
  const QuadraticForm form = parse_form(o.form);

  out << "method,re,im,err_estimate,X\n";
  for (const Method m : methods) {
    EvalResult r;
    double x_used = 0.0;
    switch (m) {
      case Method::Direct: r = dirichlet_series_eval(form, s, o.n_max.value_or(cfg.direct_n_max)); break;
      case Method::Theta: r = theta_continuation_eval(form, s); break;
      case Method::Approx: {
        ApproxParams p = ApproxParams::cubic(s.imag());
        if (X) p.X = *X;
        p.c_impl = cfg.approx_c_impl;
        x_used = p.X;
        r = approx_eval(form, s, p);
        break;
      }
    }
    out << to_string(m) << ',' << num(r.value.real()) << ',' << num(r.value.imag()) << ','
        << num(r.err_estimate) << ',' << (m == Method::Approx ? num(x_used) : std::string()) << '\n';
  }
}

// ---- zeros ----------------------------------------------------------------

struct ZerosOptions {
  std::string form = "1,0,1";
  double from = 0.0;
  double to = 0.0;
  std::optional<double> step;
  bool gaps = false;
  std::vector<std::string> laws;
};

void cmd_zeros(const ZerosOptions& o, const RunConfig& cfg, std::ostream& out) {
  if (!(o.from < o.to)) throw UsageError("--from must be below --to");
  const double step = o.step.value_or(cfg.scan_step);
  if (step < 0.0) throw UsageError("--step must be positive");
  std::vector<GapLaw> laws = o.laws.empty() ? default_laws() : parse_laws(o.laws);
  const QuadraticForm form = parse_form(o.form);

  const auto zeros = sign_change_scan(form, o.from, o.to, step > 0.0 ? step : default_scan_step(form, o.to));
  out << "gamma,t_lo,t_hi,w_residual\n";
  std::vector<double> gammas;
  for (const auto& z : zeros) {
    out << num(z.gamma) << ',' << num(z.t_lo) << ',' << num(z.t_hi) << ',' << num(z.w_residual) << '\n';
    gammas.push_back(z.gamma);
  }
  if (!o.gaps) return;
  const GapReport report = gap_report(gammas, laws);
  out << "\nlaw,exponent,constant,log_power,windows,passes,empirical_constant,first_violation,max_gap\n";
  for (const auto& lc : report.law_checks) {
    out << lc.law.name << ',' << num(lc.law.exponent) << ',' << num(lc.law.constant) << ','
        << num(lc.law.log_power) << ',' << lc.windows << ',' << lc.passes << ',' << num(lc.empirical_constant)
        << ',' << (lc.first_violation ? num(*lc.first_violation) : std::string()) << ',' << num(report.max_gap)
        << '\n';
  }
}

// ---- expsum ---------------------------------------------------------------

struct ExpsumOptions {
  std::string scenario;
  std::optional<int> desk;
  std::string suite;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> m_max;
  bool emit_scenario = false;
  bool csv = false;
};

ExpSumScenario load_scenario(const std::string& path, const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read scenario file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  auto doc = nlohmann::json::parse(text.str(), nullptr, false);
  if (doc.is_object() && !doc.contains("constants")) {
    const Comparability& c = cfg.constants;
    doc["constants"] = {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}, {"c5", c.c5}, {"c6", c.c6}};
    return scenario_from_json(doc.dump());
  }
  return scenario_from_json(text.str());
}

ordered_json lemma_suite_json(std::size_t trials, std::uint64_t seed) {
  const WeylSuiteSummary weyl = weyl_suite(trials, seed);
  double b_max = 0.0;
  std::size_t b_count = 0;
  for (const auto& trial : b_process_suite()) {
    b_max = std::max(b_max, b_process_transform(trial).constant);
    ++b_count;
  }
  double v_max = 0.0;
  std::size_t v_count = 0;
  for (const auto& trial : vdc_suite()) {
    v_max = std::max(v_max, vdc_second_derivative_bound(trial).ratio);
    ++v_count;
  }
  ordered_json doc;
  doc["seed"] = seed;
  doc["weyl"] = {{"trials", weyl.trials},
                 {"violations_lambda1", weyl.violations_lambda1},
                 {"lambda2_trials", weyl.lambda2_trials},
                 {"violations_lambda2_literal", weyl.violations_lambda2_literal},
                 {"violations_lambda2_clamped", weyl.violations_lambda2_clamped},
                 {"tolerance", "1e-9 relative"},
                 {"pass", weyl.violations_lambda1 == 0}};
  doc["b_process"] = {{"phases", b_count}, {"max_constant", b_max}, {"constant_limit", 10.0}, {"pass", b_max <= 10.0}};
  doc["van_der_corput"] = {{"phases", v_count}, {"max_ratio", v_max}, {"ratio_limit", 10.0}, {"pass", v_max <= 10.0}};
  return doc;
}

ordered_json scenario_report(const ExpSumScenario& sc, const RunConfig& cfg, std::int64_t m_max) {
  ordered_json doc;
  doc["scenario"] = ordered_json::parse(scenario_to_json(sc));
  doc["bound_report"] = ordered_json::parse(bound_report_json(bound_report(sc)));

  ordered_json reorder = ordered_json::array();
  bool all_equal = true;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const ReorderCheck rc = reorder_identity_check(sc, m);
    const bool equal = std::abs(rc.lhs - rc.rhs) <= cfg.reorder_tol * std::max(rc.scale, 1e-300);
    all_equal = all_equal && equal;
    reorder.push_back({{"m", m},
                       {"terms", rc.terms},
                       {"lhs", complex_json(rc.lhs)},
                       {"rhs", complex_json(rc.rhs)},
                       {"scale", rc.scale},
                       {"tolerance", cfg.reorder_tol},
                       {"equal", equal}});
  }
  doc["reorder_identity"] = {{"equal", all_equal}, {"per_m", reorder}};

  const WindowReport w = asymptotic_windows(sc, m_max);
  const double c = cfg.window_constant;
  WindowStat jm = w.jm_length;
  doc["asymptotic_windows"] = ordered_json::array({window_json(w.f_second, c), window_json(w.f_second_all, c),
                                                   window_json(w.g_second_prime, c), window_json(w.g_second_delta, c),
                                                   window_json(w.x_doubleprime, c),
                                                   {{"name", jm.name}, {"samples", jm.samples}, {"hi", jm.hi},
                                                    {"constant", c}, {"pass", jm.samples > 0 && jm.hi <= c}}});

  const auto M = std::min<std::int64_t>(m_max, static_cast<std::int64_t>(sc.N));
  const WeylStepDiagnostic wd = weyl_step_diagnostic(sc, M);
  ordered_json rows = ordered_json::array();
  for (const auto& r : wd.rows) {
    rows.push_back({{"m", r.m}, {"discrepancy", r.discrepancy}, {"remainder", r.remainder}, {"constant", r.constant}});
  }
  doc["weyl_step"] = {{"M", M}, {"max_constant", wd.max_constant}, {"g3_constant", wd.g3_constant}, {"rows", rows}};
  return doc;
}

void cmd_expsum(const ExpsumOptions& o, const RunConfig& cfg, std::ostream& out) {
  const std::size_t trials = o.trials.value_or(cfg.trials);
  const std::uint64_t seed = o.seed.value_or(cfg.seed);
  const std::int64_t m_max = o.m_max.value_or(cfg.m_max);
  if (trials < 1) throw UsageError("--trials must be positive");
  if (m_max < 1) throw UsageError("--m-max must be positive");

  if (!o.suite.empty()) {
    if (o.suite != "lemmas") throw UsageError("unknown suite \"" + o.suite + "\"");
    out << lemma_suite_json(trials, seed).dump(2) << '\n';
    return;
  }
  if (o.scenario.empty() == !o.desk.has_value()) throw UsageError("give exactly one of --scenario, --desk or --suite");
  const ExpSumScenario sc = o.desk ? desk_scenario(*o.desk) : load_scenario(o.scenario, cfg);
  if (o.emit_scenario) {
    out << scenario_to_json(sc) << '\n';
  } else if (o.csv) {
    out << bound_report_csv_header() << '\n' << bound_report_csv_row(bound_report(sc)) << '\n';
  } else {
    out << scenario_report(sc, cfg, m_max).dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Epstein zeta-functions, Hardy-type zero scans and lattice exponential sums"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (default: $EZETA_CONFIG)");
  std::string output;
  app.add_option("--out", output, "write the report to this file");

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "evaluate zeta_Q(s)");
  eval->add_option("--form", eo.form, "coefficients a,b,c")->required();
  eval->add_option("--s", eo.s, "sigma,t")->required();
  eval->add_option("--method", eo.methods, "comma list of direct, theta, approx");
  eval->add_option("--X", eo.X, "approx cutoff, or auto for t^3");
  eval->add_option("--n-max", eo.n_max, "direct series length");

  ZerosOptions zo;
  auto* zeros = app.add_subcommand("zeros", "scan W(t) for sign changes");
  zeros->add_option("--form", zo.form, "coefficients a,b,c");
  zeros->add_option("--from", zo.from)->required();
  zeros->add_option("--to", zo.to)->required();
  zeros->add_option("--step", zo.step, "scan step (default from density)");
  zeros->add_flag("--gaps", zo.gaps, "append the gap-law table");
  zeros->add_option("--laws", zo.laws, "e:c[:p],... gap laws c z^e (log z)^p");

  ExpsumOptions xo;
  auto* expsum = app.add_subcommand("expsum", "lattice exponential-sum reports");
  expsum->add_option("--scenario", xo.scenario, "scenario JSON file");
  expsum->add_option("--desk", xo.desk, "built-in desk scenario 0..4");
  expsum->add_option("--suite", xo.suite, "lemmas");
  expsum->add_option("--trials", xo.trials, "Weyl-differencing trials");
  expsum->add_option("--seed", xo.seed, "random seed");
  expsum->add_option("--m-max", xo.m_max, "largest m in reorder and window checks");
  expsum->add_flag("--emit-scenario", xo.emit_scenario, "print the scenario JSON only");
  expsum->add_flag("--csv", xo.csv, "print the bound report as a CSV row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  RunConfig cfg;
  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv("EZETA_CONFIG"); env != nullptr && *env != '\0') config_path = env;
    }
    if (!config_path.empty()) cfg = RunConfig::load_file(config_path);
    if (!output.empty()) cfg.output = output;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream report;
  try {
    if (eval->parsed()) {
      cmd_eval(eo, cfg, report);
    } else if (zeros->parsed()) {
      cmd_zeros(zo, cfg, report);
    } else {
      cmd_expsum(xo, cfg, report);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  if (cfg.output.empty()) {
    out << report.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!(file << report.str())) {
      err << "error: cannot write " << cfg.output << '\n';
      return kDomainError;
    }
  }
  return kOk;
}

}  // namespace ezeta::cli
