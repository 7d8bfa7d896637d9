#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace stolarsky {

using Rng = std::mt19937_64;

/// Generator for substream `stream` of `seed`. Substreams are what make
/// chunked parallel loops reproducible: chunk k always draws from
/// substream(seed, k), whichever thread runs it.
Rng substream(std::uint64_t seed, std::uint64_t stream);

/// Standard normal draw.
double standard_normal(Rng &rng);

/// Uniform draw in [0, 1).
double uniform01(Rng &rng);

/// Runs body(chunk_index) for chunk_index in [0, chunks) on a small pool of
/// std::threads. Callers write into per-chunk slots and reduce in index order
/// afterwards, so results do not depend on the schedule.
void parallel_for_chunks(std::size_t chunks,
                         const std::function<void(std::size_t)> &body);

/// Accumulated first and second moments of a sample stream.
struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  void merge(const Moments &o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    count += o.count;
  }
  double mean() const;
  /// Sample standard deviation divided by sqrt(count).
  double std_error() const;
};

/// Splits `samples` into fixed-size chunks, runs draw(rng) once per sample
/// with rng = substream(seed, chunk) and returns the merged moments.
Moments monte_carlo(std::uint64_t seed, std::uint64_t samples,
                    const std::function<double(Rng &)> &draw);

} // namespace stolarsky
