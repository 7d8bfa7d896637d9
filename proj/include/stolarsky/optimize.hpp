#pragma once

#include "stolarsky/invariance.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace stolarsky {

/// Hill climbing on tau[D_N]: move one point at a time by Gaussian jitter of
/// its representative vector and keep the move iff the sum strictly grows.
/// The step sigma is multiplied by step_decay after stall_limit consecutive
/// rejections.
struct OptimizeConfig {
  int N = 2;
  long iterations = 10000;
  double initial_step = 0.5;
  double step_decay = 0.5;
  int stall_limit = 50;
  std::uint64_t seed = 1;
  int restarts = 1;

  /// Throws std::domain_error for N < 2, iterations < 1, restarts < 1,
  /// stall_limit < 1, initial_step <= 0 or step_decay outside (0, 1].
  void validate() const;
};

struct OptimizeResult {
  PointSet points;
  /// tau[D_N] of the random start of the winning restart, and at the end.
  double initial_sum = 0.0;
  double final_sum = 0.0;
  long accepted = 0;
  int best_restart = 0;
};

/// Called after every accepted move with the running tau[D_N] before and
/// after the move.
using AcceptObserver = std::function<void(double before, double after)>;

/// Runs cfg.restarts independent searches (restart k draws from
/// substream(cfg.seed, k)) and returns the one with the largest final sum.
/// Throws unsupported_operation for OP2.
OptimizeResult local_search(const SpaceId &space, const OptimizeConfig &cfg,
                            const AcceptObserver &observer = {});

/// <tau> N^2 - tau[D_N].
double deficit(const PointSet &d);

struct ScalingReport {
  SpaceId space;
  std::vector<int> Ns;
  std::vector<double> deficits;
  /// |deficit - gamma lambda| / deficit for each N.
  std::vector<double> duality_errors;
  std::vector<PointSet> configurations;
  double fitted_exponent = 0.0;
  double target_exponent = 0.0;
};

/// Optimizes each N in Ns and fits log(deficit) = a + b log(N) by least
/// squares; b is fitted_exponent and 1 - 1/d the target. Here cfg.iterations
/// counts moves per point, so the search for N gets N * cfg.iterations moves.
/// Throws std::domain_error unless Ns is strictly increasing with at least
/// three entries, all >= 4.
ScalingReport scaling_experiment(const SpaceId &space, const std::vector<int> &Ns,
                                 const OptimizeConfig &cfg);

} // namespace stolarsky
