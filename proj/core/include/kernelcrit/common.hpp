#ifndef KERNELCRIT_COMMON_HPP
#define KERNELCRIT_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kernelcrit {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Compensated (Kahan) accumulator. Long epidemics sum thousands of log
// terms and interval contributions; the compensation keeps the error
// independent of the number of terms.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// splitmix64, used to derive independent sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

struct ExtinctionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowUnattainableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StreamExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kernelcrit

#endif
