#ifndef KERNELCRIT_POPULATION_HPP
#define KERNELCRIT_POPULATION_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace kernelcrit {

struct Host {
  int id;
  double x;
  double y;
};

// Fixed host coordinates in [0, region_side]^2. Immutable after
// construction, so instances (and the distance cache) can be shared
// across threads freely.
class HostPopulation {
 public:
  HostPopulation(std::vector<Host> hosts, double region_side,
                 int distance_cache_cap = kDefaultCacheCap);

  static HostPopulation uniform_random(int n, double region_side,
                                       std::uint64_t seed,
                                       int distance_cache_cap = kDefaultCacheCap);

  int size() const { return static_cast<int>(hosts_.size()); }
  const Host& host(int id) const { return hosts_[static_cast<size_t>(id)]; }
  const std::vector<Host>& hosts() const { return hosts_; }
  double region_side() const { return region_side_; }

  double distance(int i, int j) const {
    if (!dist_.empty()) return dist_[static_cast<size_t>(i) * hosts_.size() + j];
    return compute_distance(i, j);
  }

  bool has_distance_cache() const { return !dist_.empty(); }

  static constexpr int kDefaultCacheCap = 2000;

 private:
  double compute_distance(int i, int j) const;

  std::vector<Host> hosts_;
  double region_side_;
  std::vector<double> dist_;  // row-major N*N, empty when N > cap
};

using PopulationPtr = std::shared_ptr<const HostPopulation>;

}  // namespace kernelcrit

#endif
