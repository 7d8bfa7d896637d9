#include "stolarsky/cli.hpp"

#include "stolarsky/errors.hpp"
#include "stolarsky/invariance.hpp"
#include "stolarsky/io.hpp"
#include "stolarsky/jacobi.hpp"
#include "stolarsky/optimize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace stolarsky::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char *kVersion = "1.0.0";

// Random point sets are drawn from a substream that Monte Carlo chunks never
// reach, so the same seed can drive both without correlation.
constexpr std::uint64_t kPointStream = std::numeric_limits<std::uint64_t>::max();

const std::map<Command, std::string> &command_names() {
  static const std::map<Command, std::string> names{
      {Command::Gamma, "gamma"},     {Command::Verify, "verify"},
      {Command::Discrepancy, "discrepancy"}, {Command::Optimize, "optimize"},
      {Command::Expand, "expand"},   {Command::Sample, "sample"}};
  return names;
}

Gate gate_at_most(std::string name, double value, double limit) {
  return {std::move(name), value, limit, value <= limit};
}

Json gates_json(const std::vector<Gate> &gates) {
  Json out = Json::array();
  for (const auto &g : gates)
    out.push_back({{"name", g.name}, {"value", g.value}, {"limit", g.limit}, {"pass", g.pass}});
  return out;
}

Json estimate_json(const McEstimate &e) {
  return {{"value", e.value}, {"std_error", e.std_error}, {"samples", e.samples},
          {"seed", e.seed}};
}

std::string config_line(const RunConfig &cfg) { return "config " + cfg.to_json().dump(); }

std::string csv_comment(const RunConfig &cfg) { return "# " + config_line(cfg) + "\n"; }

PointSet random_set(const RunConfig &cfg, int n) {
  Rng rng = substream(cfg.seed, kPointStream);
  return random_point_set(cfg.space, static_cast<std::size_t>(n), rng);
}

int single_n(const RunConfig &cfg) {
  if (cfg.n.size() != 1)
    throw std::domain_error(command_name(cfg.command) + ": expects a single --n");
  if (cfg.n[0] < 1)
    throw std::domain_error(command_name(cfg.command) + ": --n must be >= 1");
  return cfg.n[0];
}

Report finish(const RunConfig &cfg, Json body, std::vector<Gate> gates, std::string csv) {
  Report r;
  r.json["config"] = cfg.to_json();
  for (auto &[key, value] : body.items())
    r.json[key] = std::move(value);
  r.json["gates"] = gates_json(gates);
  r.gates = std::move(gates);
  r.json["passed"] = r.passed();
  r.csv = std::move(csv);
  return r;
}

Report cmd_gamma(const RunConfig &cfg) {
  const SpaceId &space = cfg.space;
  const double gamma = gamma_const(space);
  Json by_l = Json::array();
  double worst = 0.0;
  for (int l = 1; l <= 5; ++l) {
    const double g = gamma_from_equation(space, l);
    worst = std::max(worst, std::fabs(g - gamma) / gamma);
    by_l.push_back({{"l", l}, {"gamma", g}});
  }
  Json body{{"gamma", gamma},
            {"mean_tau", mean_chordal(space)},
            {"mean_sd_metric", mean_sd_metric(space)},
            {"gamma_from_l", by_l},
            {"max_relative_deviation", worst}};
  std::vector<Gate> gates{gate_at_most("gamma_consistency", worst, cfg.tolerance("gamma"))};
  std::ostringstream csv;
  csv << csv_comment(cfg) << "quantity,value\n"
      << "gamma," << format_double(gamma) << "\n"
      << "mean_tau," << format_double(mean_chordal(space)) << "\n"
      << "mean_sd_metric," << format_double(mean_sd_metric(space)) << "\n"
      << "max_relative_deviation," << format_double(worst) << "\n";
  return finish(cfg, std::move(body), std::move(gates), csv.str());
}

/// Largest |gamma sd_series(theta) - tau| over the pairs of d.
double series_deviation(const PointSet &d, int L, double &tail) {
  ZonalExpansion expansion(d.space());
  const double gamma = gamma_const(d.space());
  double worst = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const double theta = geodesic_distance(d[i], d[j]);
      const auto s = expansion.sd_series(theta, L);
      worst = std::max(worst, std::fabs(gamma * s.value - chordal_distance(d[i], d[j])));
      tail = s.truncation.tail_bound;
    }
  return worst;
}

Report cmd_verify(const RunConfig &cfg) {
  const int n = single_n(cfg);
  const PointSet d = random_set(cfg, n);
  const double gamma = gamma_const(d.space());
  const double scale = mean_chordal(d.space()) * n * n;
  const double tau_sum = sum_pairwise_chordal(d);
  const double lambda = quadratic_discrepancy(d);
  const double closed = invariance_residual(d, lambda);

  std::vector<Gate> gates{
      gate_at_most("closed_form_residual", std::fabs(closed) / scale, cfg.tolerance("residual"))};
  Json body{{"n", n}, {"tau_sum", tau_sum}, {"lambda", lambda},
            {"closed_form_residual", closed}};
  std::ostringstream csv;
  csv << csv_comment(cfg) << "quantity,value\n"
      << "tau_sum," << format_double(tau_sum) << "\n"
      << "lambda," << format_double(lambda) << "\n"
      << "closed_form_residual," << format_double(closed) << "\n";

  if (d.space().samplable()) {
    const auto mc = mc_discrepancy(d, cfg.samples, cfg.seed);
    const double residual = invariance_residual(d, mc.value);
    body["mc_lambda"] = estimate_json(mc);
    body["mc_residual"] = residual;
    gates.push_back(gate_at_most("mc_residual_sigmas",
                                 std::fabs(residual) / (gamma * mc.std_error),
                                 cfg.tolerance("mc_sigma")));
    csv << "mc_lambda," << format_double(mc.value) << "\n"
        << "mc_lambda_std_error," << format_double(mc.std_error) << "\n"
        << "mc_residual," << format_double(residual) << "\n";
  } else {
    body["mc_lambda"] = nullptr;
    body["mc_skipped"] = "no uniform sampler for " + d.space().name();
  }

  double tail = 0.0;
  const double series = series_deviation(d, cfg.trunc_l, tail);
  body["series_max_deviation"] = series;
  body["series_tail_bound"] = tail;
  gates.push_back(gate_at_most("series_deviation", series, cfg.tolerance("series")));
  csv << "series_max_deviation," << format_double(series) << "\n";
  return finish(cfg, std::move(body), std::move(gates), csv.str());
}

Report cmd_discrepancy(const RunConfig &cfg) {
  std::optional<PointSet> loaded;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in)
      throw parse_error("cannot open point set \"" + cfg.input + "\"");
    loaded = read_point_set_csv(in);
    if (loaded->space() != cfg.space)
      throw std::domain_error("discrepancy: " + cfg.input + " holds points of " +
                              loaded->space().name() + ", not " + cfg.space.name());
  } else {
    loaded = random_set(cfg, single_n(cfg));
  }
  const PointSet &d = *loaded;
  const double gamma = gamma_const(d.space());
  const double lambda = quadratic_discrepancy(d);
  const double def = deficit(d);
  std::vector<Gate> gates{gate_at_most(
      "duality", std::fabs(def - gamma * lambda) / std::max(def, 1e-300), cfg.tolerance("duality"))};
  Json body{{"n", d.size()}, {"tau_sum", sum_pairwise_chordal(d)}, {"lambda", lambda},
            {"deficit", def}, {"gamma_lambda", gamma * lambda}};
  std::ostringstream csv;
  csv << csv_comment(cfg) << "quantity,value\n"
      << "lambda," << format_double(lambda) << "\n"
      << "deficit," << format_double(def) << "\n";
  if (d.space().samplable()) {
    const auto mc = mc_discrepancy(d, cfg.samples, cfg.seed);
    body["mc_lambda"] = estimate_json(mc);
    gates.push_back(gate_at_most("mc_lambda_sigmas", std::fabs(mc.value - lambda) / mc.std_error,
                                 cfg.tolerance("mc_sigma")));
    csv << "mc_lambda," << format_double(mc.value) << "\n"
        << "mc_lambda_std_error," << format_double(mc.std_error) << "\n";
  }
  return finish(cfg, std::move(body), std::move(gates), csv.str());
}

Json points_json(const PointSet &d) {
  Json pts = Json::array();
  for (const auto &p : d.points())
    pts.push_back(point_coordinates(p));
  return pts;
}

Report cmd_optimize(const RunConfig &cfg) {
  OptimizeConfig oc;
  oc.seed = cfg.seed;
  oc.restarts = cfg.restarts;
  oc.iterations = cfg.iterations;
  const double gamma = gamma_const(cfg.space);
  if (cfg.n.size() == 1) {
    oc.N = cfg.n[0];
    oc.iterations = cfg.iterations * cfg.n[0];
    const auto result = local_search(cfg.space, oc);
    const double def = deficit(result.points);
    const double dual =
        std::fabs(def - gamma * quadratic_discrepancy(result.points)) / std::max(def, 1e-300);
    Json body{{"n", oc.N},
              {"initial_tau_sum", result.initial_sum},
              {"tau_sum", result.final_sum},
              {"deficit", def},
              {"accepted_moves", result.accepted},
              {"best_restart", result.best_restart},
              {"points", points_json(result.points)}};
    std::vector<Gate> gates{gate_at_most("duality", dual, cfg.tolerance("duality"))};
    std::ostringstream csv;
    write_point_set_csv(csv, result.points, config_line(cfg));
    return finish(cfg, std::move(body), std::move(gates), csv.str());
  }
  const auto report = scaling_experiment(cfg.space, cfg.n, oc);
  bool increasing = true;
  for (std::size_t i = 1; i < report.deficits.size(); ++i)
    increasing = increasing && report.deficits[i] > report.deficits[i - 1];
  const double worst_dual =
      *std::max_element(report.duality_errors.begin(), report.duality_errors.end());
  const double min_deficit = *std::min_element(report.deficits.begin(), report.deficits.end());
  std::vector<Gate> gates{
      gate_at_most("duality", worst_dual, cfg.tolerance("duality")),
      {"deficits_positive", min_deficit, 0.0, min_deficit > 0.0},
      {"deficits_increasing", increasing ? 1.0 : 0.0, 1.0, increasing},
      gate_at_most("exponent", std::fabs(report.fitted_exponent - report.target_exponent),
                   cfg.tolerance("exponent"))};
  Json body{{"ns", report.Ns},
            {"deficits", report.deficits},
            {"duality_errors", report.duality_errors},
            {"fitted_exponent", report.fitted_exponent},
            {"target_exponent", report.target_exponent}};
  std::ostringstream csv;
  csv << csv_comment(cfg) << "n,deficit,duality_error,fitted_exponent,target_exponent\n";
  for (std::size_t i = 0; i < report.Ns.size(); ++i)
    csv << report.Ns[i] << "," << format_double(report.deficits[i]) << ","
        << format_double(report.duality_errors[i]) << ","
        << format_double(report.fitted_exponent) << ","
        << format_double(report.target_exponent) << "\n";
  return finish(cfg, std::move(body), std::move(gates), csv.str());
}

Report cmd_expand(const RunConfig &cfg) {
  std::vector<double> thetas = cfg.thetas;
  if (thetas.empty())
    for (int k = 0; k <= 8; ++k)
      thetas.push_back(std::numbers::pi * k / 8.0);
  ZonalExpansion expansion(cfg.space);
  const double gamma = gamma_const(cfg.space);
  Json rows = Json::array();
  std::ostringstream csv;
  csv << csv_comment(cfg) << "theta,tau_series,sd_series,tau_closed,sd_closed\n";
  for (double theta : thetas) {
    const auto tau = expansion.tau_series(theta, cfg.trunc_l);
    const auto sd = expansion.sd_series(theta, cfg.trunc_l);
    const double tau_closed = std::sin(theta / 2.0);
    rows.push_back({{"theta", theta},
                    {"tau_series", tau.value},
                    {"tau_tail_bound", tau.truncation.tail_bound},
                    {"sd_series", sd.value},
                    {"sd_tail_bound", sd.truncation.tail_bound},
                    {"tau_closed", tau_closed},
                    {"sd_closed", tau_closed / gamma}});
    csv << format_double(theta) << "," << format_double(tau.value) << ","
        << format_double(sd.value) << "," << format_double(tau_closed) << ","
        << format_double(tau_closed / gamma) << "\n";
  }
  return finish(cfg, {{"rows", rows}}, {}, csv.str());
}

Report cmd_sample(const RunConfig &cfg) {
  const PointSet d = random_set(cfg, single_n(cfg));
  std::ostringstream csv;
  write_point_set_csv(csv, d, config_line(cfg));
  Json body{{"n", d.size()},
            {"uniform", d.space().samplable()},
            {"points", points_json(d)}};
  return finish(cfg, std::move(body), {}, csv.str());
}

} // namespace

std::string command_name(Command c) { return command_names().at(c); }

std::map<std::string, double> default_tolerances() {
  return {{"gamma", 1e-9},  {"residual", 1e-9}, {"mc_sigma", 3.0},
          {"series", 1e-3}, {"duality", 1e-9},  {"exponent", 0.2}};
}

Json RunConfig::to_json() const {
  Json tol = Json::object();
  for (const auto &[k, v] : tolerances)
    tol[k] = v;
  return {{"command", command_name(command)},
          {"space", space.name()},
          {"n", n},
          {"seed", seed},
          {"samples", samples},
          {"trunc_l", trunc_l},
          {"input", input},
          {"format", format == Format::Json ? "json" : "csv"},
          {"thetas", thetas},
          {"iterations", iterations},
          {"restarts", restarts},
          {"tolerances", tol},
          {"version", kVersion}};
}

bool Report::passed() const {
  return std::all_of(gates.begin(), gates.end(), [](const Gate &g) { return g.pass; });
}

std::string Report::render(Format format) const {
  return format == Format::Json ? json.dump(2) + "\n" : csv;
}

Report run(const RunConfig &cfg) {
  switch (cfg.command) {
  case Command::Gamma:
    return cmd_gamma(cfg);
  case Command::Verify:
    return cmd_verify(cfg);
  case Command::Discrepancy:
    return cmd_discrepancy(cfg);
  case Command::Optimize:
    return cmd_optimize(cfg);
  case Command::Expand:
    return cmd_expand(cfg);
  case Command::Sample:
    return cmd_sample(cfg);
  }
  throw std::logic_error("run: unknown command");
}

namespace {

/// Pulls --tolerance.<name>=<v> and --tolerance.<name> <v> out of the
/// argument list, since CLI11 has no wildcard options.
std::vector<std::string> take_tolerances(std::vector<std::string> args,
                                         std::map<std::string, double> &tolerances) {
  const std::string prefix = "--tolerance.";
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string &a = args[i];
    if (!a.starts_with(prefix)) {
      rest.push_back(a);
      continue;
    }
    std::string name = a.substr(prefix.size());
    std::string value;
    if (const auto eq = name.find('='); eq != std::string::npos) {
      value = name.substr(eq + 1);
      name.resize(eq);
    } else if (i + 1 < args.size()) {
      value = args[++i];
    } else {
      throw parse_error("option " + a + " needs a value");
    }
    if (!tolerances.contains(name))
      throw parse_error("unknown tolerance \"" + name + "\"");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != value.size() || !(v >= 0.0))
      throw parse_error("bad value \"" + value + "\" for --tolerance." + name);
    tolerances[name] = v;
  }
  return rest;
}

} // namespace

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = take_tolerances(std::move(args), cfg.tolerances);
  } catch (const parse_error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Stolarsky invariance on spheres and projective spaces", "stolarsky"};
  app.require_subcommand(1);
  std::string space_name = "S2";
  std::string format = "json";
  std::map<std::string, Command> subcommands;
  const std::map<Command, std::string> help{
      {Command::Gamma, "constants gamma, <tau>, <theta^Delta> and the gamma-from-l check"},
      {Command::Verify, "invariance principle on a random point set (closed form, MC, series)"},
      {Command::Discrepancy, "discrepancy of a random or given point set"},
      {Command::Optimize, "maximize the chordal sum; several --n run a scaling fit"},
      {Command::Expand, "truncated zonal series next to the closed forms"},
      {Command::Sample, "random point set as CSV"}};
  for (const auto &[command, name] : command_names()) {
    CLI::App *sub = app.add_subcommand(name, help.at(command));
    subcommands[name] = command;
    sub->add_option("--space", space_name, "S<d>, RP<n>, CP<n>, HP<n> or OP2");
    sub->add_option("--n", cfg.n, "number of points (comma separated for optimize)")
        ->delimiter(',');
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples");
    sub->add_option("--trunc-l", cfg.trunc_l, "series truncation L")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--in", cfg.input, "point set CSV (discrepancy)");
    sub->add_option("--theta", cfg.thetas, "angles for expand")->delimiter(',');
    sub->add_option("--iterations", cfg.iterations, "optimizer moves per point")
        ->check(CLI::PositiveNumber);
    sub->add_option("--restarts", cfg.restarts, "optimizer restarts")
        ->check(CLI::PositiveNumber);
  }
  app.footer("Tolerances: --tolerance.<name>=<value> with name one of gamma, residual, "
             "mc_sigma, series, duality, exponent.");

  try {
    // CLI11 consumes the vector form from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? 0 : 2;
  }

  for (const auto *sub : app.get_subcommands())
    cfg.command = subcommands.at(sub->get_name());
  cfg.format = format == "csv" ? Format::Csv : Format::Json;

  Report report;
  try {
    cfg.space = SpaceId::parse(space_name);
    report = run(cfg);
  } catch (const parse_error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_operation &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = report.render(cfg.format);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    file << text;
  }
  for (const auto &g : report.gates)
    if (!g.pass)
      err << "gate failed: " << g.name << " (value " << g.value << ", limit " << g.limit
          << ")\n";
  return report.exit_code();
}

} // namespace stolarsky::cli
