#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace mvrp {

/// Seedable random stream with platform-independent output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not (their algorithms are
/// implementation-defined), so every derived quantity is computed here:
///
///   uniform01()        = (next() >> 11) * 2^-53
///   uniform_index(n)   = rejection sampling on the top of the 64-bit range
///   shuffle()          = Fisher-Yates from the back using uniform_index
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <class T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  /// Two distinct indices in [0, n), first < second. n must be >= 2.
  std::pair<std::size_t, std::size_t> distinct_pair(std::size_t n) {
    auto a = static_cast<std::size_t>(uniform_index(n));
    auto b = static_cast<std::size_t>(uniform_index(n - 1));
    if (b >= a) ++b;
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Sub-seed for a pipeline stage: mix64 applied over the master seed, the
/// FNV-1a hash of `label` and `index`, in that order. Independent of call
/// order and thread scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index = 0) noexcept;

}  // namespace mvrp
