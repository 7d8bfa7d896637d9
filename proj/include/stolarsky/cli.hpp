#pragma once

#include "stolarsky/spaces.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace stolarsky::cli {

enum class Command { Gamma, Verify, Discrepancy, Optimize, Expand, Sample };
enum class Format { Json, Csv };

std::string command_name(Command c);

/// Tolerances a run may override with --tolerance.<name>=<value>:
///   gamma     relative deviation of gamma recomputed from each l
///   residual  invariance residual relative to <tau> N^2
///   mc_sigma  allowed multiple of the Monte Carlo standard error
///   series    |gamma sd_series - tau| on the pairs of a point set
///   duality   |deficit - gamma lambda| relative to the deficit
///   exponent  distance of the fitted deficit exponent from 1 - 1/d
std::map<std::string, double> default_tolerances();

struct RunConfig {
  Command command = Command::Gamma;
  SpaceId space{Family::Sphere, 2};
  /// Point counts. Only optimize uses more than one.
  std::vector<int> n{16};
  std::uint64_t seed = 1;
  std::uint64_t samples = 200000;
  int trunc_l = 2000;
  std::map<std::string, double> tolerances = default_tolerances();
  /// Point set CSV read by discrepancy instead of drawing a random set.
  std::string input;
  /// Empty means stdout.
  std::string out;
  Format format = Format::Json;
  /// Angles for expand; empty means 9 equally spaced values in [0, pi].
  std::vector<double> thetas;
  /// Optimizer moves per point and independent restarts.
  long iterations = 1000;
  int restarts = 2;

  double tolerance(const std::string &name) const { return tolerances.at(name); }
  nlohmann::ordered_json to_json() const;
};

struct Gate {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool pass = false;
};

struct Report {
  nlohmann::ordered_json json;
  std::string csv;
  std::vector<Gate> gates;

  bool passed() const;
  /// 0 if every gate passed, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
  std::string render(Format format) const;
};

/// Executes one command. Throws parse_error, std::domain_error and
/// unsupported_operation for invalid requests.
Report run(const RunConfig &cfg);

/// Full command line front end. Returns 0 on success, 1 when a gate fails
/// and 2 for usage errors.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace stolarsky::cli
