#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace netsac {

/// Seed derivation for independent substreams. Each (base, id...) tuple maps
/// to a statistically independent seed, so per-agent streams can be created
/// in any order without affecting reproducibility.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base) { return splitmix64(base); }

template <typename... Ids>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t id, Ids... rest) {
  return derive_seed(splitmix64(base ^ splitmix64(id)), rest...);
}

/// Stream purposes, used as derivation ids so that e.g. action sampling and
/// transition sampling never share a stream.
namespace stream {
inline constexpr std::uint64_t kInitState = 1;
inline constexpr std::uint64_t kAction = 2;
inline constexpr std::uint64_t kTransition = 3;
inline constexpr std::uint64_t kEvaluation = 4;
inline constexpr std::uint64_t kOuterIteration = 5;
inline constexpr std::uint64_t kEnvParams = 6;
inline constexpr std::uint64_t kPolicy = 7;
}  // namespace stream

/// A seeded random stream. Thin wrapper over mt19937_64 plus the discrete
/// sampling helpers the simulator needs.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  double uniform01() {
    // 53-bit mantissa; uniform on [0,1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Inverse-CDF draw from an explicit probability vector.
  int sample_discrete(std::span<const double> probs) {
    double u = uniform01();
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
      acc += probs[k];
      if (u < acc) return static_cast<int>(k);
    }
    // guard against accumulated rounding when u ~ 1
    for (std::size_t k = probs.size(); k-- > 0;) {
      if (probs[k] > 0.0) return static_cast<int>(k);
    }
    throw std::invalid_argument("sample_discrete: all-zero probability vector");
  }

  /// Draw using a precomputed inclusive cumulative distribution.
  int sample_cdf(std::span<const double> cdf) {
    double u = uniform01();
    for (std::size_t k = 0; k + 1 < cdf.size(); ++k) {
      if (u < cdf[k]) return static_cast<int>(k);
    }
    return static_cast<int>(cdf.size()) - 1;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace netsac
