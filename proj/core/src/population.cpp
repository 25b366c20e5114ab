#include "kernelcrit/population.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace kernelcrit {

HostPopulation::HostPopulation(std::vector<Host> hosts, double region_side,
                               int distance_cache_cap)
    : hosts_(std::move(hosts)), region_side_(region_side) {
  if (region_side_ <= 0.0) throw std::invalid_argument("region_side must be positive");
  std::sort(hosts_.begin(), hosts_.end(),
            [](const Host& a, const Host& b) { return a.id < b.id; });
  const int n = static_cast<int>(hosts_.size());
  for (int i = 0; i < n; ++i) {
    const Host& h = hosts_[static_cast<size_t>(i)];
    if (h.id != i) throw std::invalid_argument("host ids must be dense 0..N-1");
    if (h.x < 0.0 || h.x > region_side_ || h.y < 0.0 || h.y > region_side_)
      throw std::invalid_argument("host coordinates outside region");
  }
  if (n <= distance_cache_cap) {
    dist_.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      dist_[static_cast<size_t>(i) * n + i] = 0.0;
      for (int j = i + 1; j < n; ++j) {
        double d = compute_distance(i, j);
        dist_[static_cast<size_t>(i) * n + j] = d;
        dist_[static_cast<size_t>(j) * n + i] = d;
      }
    }
  }
}

double HostPopulation::compute_distance(int i, int j) const {
  const Host& a = hosts_[static_cast<size_t>(i)];
  const Host& b = hosts_[static_cast<size_t>(j)];
  return std::hypot(a.x - b.x, a.y - b.y);
}

HostPopulation HostPopulation::uniform_random(int n, double region_side,
                                              std::uint64_t seed,
                                              int distance_cache_cap) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, region_side);
  std::vector<Host> hosts;
  hosts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = u(rng);
    double y = u(rng);
    hosts.push_back(Host{i, x, y});
  }
  return HostPopulation(std::move(hosts), region_side, distance_cache_cap);
}

}  // namespace kernelcrit
