#include "stolarsky/optimize.hpp"

#include "stolarsky/errors.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace stolarsky {

void OptimizeConfig::validate() const {
  if (N < 2)
    throw std::domain_error("OptimizeConfig: N must be >= 2");
  if (iterations < 1)
    throw std::domain_error("OptimizeConfig: iterations must be >= 1");
  if (restarts < 1)
    throw std::domain_error("OptimizeConfig: restarts must be >= 1");
  if (stall_limit < 1)
    throw std::domain_error("OptimizeConfig: stall_limit must be >= 1");
  if (!(initial_step > 0.0))
    throw std::domain_error("OptimizeConfig: initial_step must be > 0");
  if (!(step_decay > 0.0 && step_decay <= 1.0))
    throw std::domain_error("OptimizeConfig: step_decay must lie in (0, 1]");
}

namespace {

struct Walker {
  std::vector<std::vector<double>> coords;
  std::vector<Point> points;
  double initial_sum = 0.0;
  double sum = 0.0;
  long accepted = 0;
};

Walker search_one(const SpaceId &space, const OptimizeConfig &cfg, Rng rng,
                  const AcceptObserver &observer) {
  const auto n = static_cast<std::size_t>(cfg.N);
  const auto dim = static_cast<std::size_t>(space.representative_dim());
  Walker w;
  // Normalized Gaussian representatives are uniform on every samplable space.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(dim);
    for (auto &x : c)
      x = standard_normal(rng);
    w.points.push_back(point_from_representative(space, c));
    w.coords.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      w.sum += 2.0 * chordal_distance(w.points[i], w.points[j]);
  w.initial_sum = w.sum;

  double sigma = cfg.initial_step;
  int stall = 0;
  std::vector<double> trial(dim);
  for (long it = 0; it < cfg.iterations; ++it) {
    const auto i = static_cast<std::size_t>(it % cfg.N);
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      trial[k] = w.coords[i][k] + sigma * standard_normal(rng);
      norm_sq += trial[k] * trial[k];
    }
    for (auto &x : trial)
      x /= std::sqrt(norm_sq);
    const Point moved = point_from_representative(space, trial);
    double delta = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i)
        delta += chordal_distance(moved, w.points[j]) - chordal_distance(w.points[i], w.points[j]);
    if (delta > 0.0) {
      const double before = w.sum;
      w.sum += 2.0 * delta;
      w.points[i] = moved;
      w.coords[i] = trial;
      ++w.accepted;
      stall = 0;
      if (observer)
        observer(before, w.sum);
    } else if (++stall >= cfg.stall_limit) {
      sigma *= cfg.step_decay;
      stall = 0;
    }
  }
  // Drop the drift of the running sum.
  w.sum = sum_pairwise_chordal(PointSet(space, w.points));
  return w;
}

} // namespace

OptimizeResult local_search(const SpaceId &space, const OptimizeConfig &cfg,
                            const AcceptObserver &observer) {
  cfg.validate();
  if (!space.samplable())
    throw unsupported_operation("local_search: " + space.name() +
                                " has no uniform sampler, optimization is not supported");
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  std::vector<std::optional<Walker>> walkers(restarts);
  if (observer) {
    // Keep observer calls on the caller's thread.
    for (std::size_t k = 0; k < restarts; ++k)
      walkers[k] = search_one(space, cfg, substream(cfg.seed, k), observer);
  } else {
    parallel_for_chunks(restarts, [&](std::size_t k) {
      walkers[k] = search_one(space, cfg, substream(cfg.seed, k), {});
    });
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < restarts; ++k)
    if (walkers[k]->sum > walkers[best]->sum)
      best = k;
  Walker &w = *walkers[best];
  return {PointSet(space, std::move(w.points)), w.initial_sum, w.sum, w.accepted,
          static_cast<int>(best)};
}

double deficit(const PointSet &d) {
  const double n = static_cast<double>(d.size());
  return mean_chordal(d.space()) * n * n - sum_pairwise_chordal(d);
}

ScalingReport scaling_experiment(const SpaceId &space, const std::vector<int> &Ns,
                                 const OptimizeConfig &cfg) {
  if (Ns.size() < 3)
    throw std::domain_error("scaling_experiment: at least three values of N are needed");
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (Ns[i] < 4)
      throw std::domain_error("scaling_experiment: every N must be >= 4");
    if (i > 0 && Ns[i] <= Ns[i - 1])
      throw std::domain_error("scaling_experiment: Ns must be strictly increasing");
  }
  ScalingReport report{space, Ns, {}, {}, {}, 0.0, 1.0 - 1.0 / space.d()};
  const double gamma = gamma_const(space);
  for (int n : Ns) {
    OptimizeConfig c = cfg;
    c.N = n;
    c.iterations = cfg.iterations * n;
    auto result = local_search(space, c);
    const double def = deficit(result.points);
    report.deficits.push_back(def);
    report.duality_errors.push_back(
        std::fabs(def - gamma * quadratic_discrepancy(result.points)) / def);
    report.configurations.push_back(std::move(result.points));
  }
  double mx = 0.0, my = 0.0;
  const double k = static_cast<double>(Ns.size());
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    mx += std::log(Ns[i]) / k;
    my += std::log(report.deficits[i]) / k;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const double dx = std::log(Ns[i]) - mx;
    sxy += dx * (std::log(report.deficits[i]) - my);
    sxx += dx * dx;
  }
  report.fitted_exponent = sxy / sxx;
  return report;
}

} // namespace stolarsky
