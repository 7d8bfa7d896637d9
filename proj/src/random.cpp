#include "stolarsky/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace stolarsky {

namespace {
constexpr std::uint64_t kChunkSize = 8192;
}

Rng substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
  return Rng(seq);
}

double standard_normal(Rng &rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

double uniform01(Rng &rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

void parallel_for_chunks(std::size_t chunks,
                         const std::function<void(std::size_t)> &body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), chunks);
  if (workers <= 1) {
    for (std::size_t k = 0; k < chunks; ++k)
      body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < chunks; k = next++)
        body(k);
    });
}

double Moments::mean() const {
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double Moments::std_error() const {
  if (count < 2)
    return 0.0;
  const double n = static_cast<double>(count);
  const double m = sum / n;
  const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1.0));
  return std::sqrt(var / n);
}

Moments monte_carlo(std::uint64_t seed, std::uint64_t samples,
                    const std::function<double(Rng &)> &draw) {
  const std::size_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<Moments> partial(chunks);
  parallel_for_chunks(chunks, [&](std::size_t k) {
    Rng rng = substream(seed, k);
    const std::uint64_t begin = k * kChunkSize;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kChunkSize);
    Moments m;
    for (std::uint64_t i = begin; i < end; ++i)
      m.add(draw(rng));
    partial[k] = m;
  });
  Moments total;
  for (const auto &m : partial)
    total.merge(m);
  return total;
}

} // namespace stolarsky
