#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace belyi {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bijective avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// One SplitMix64 step: advances `state` by the golden gamma and mixes it.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ULL;
  return mix64(state);
}

/// xoshiro256** 1.0 (Blackman & Vigna 2018).
///
/// This is the only generator used anywhere in the project. Seeding from a
/// single 64-bit value follows the reference recommendation: four successive
/// SplitMix64 outputs fill the state. Satisfies UniformRandomBitGenerator.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed = 0) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  const std::array<std::uint64_t, 4>& state() const noexcept { return state_; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

using Rng = Xoshiro256StarStar;

/// Per-trial stream: seed = mix64(master_seed ^ mix64(trial_index + 0x9E3779B97F4A7C15)).
///
/// The inner mix decorrelates consecutive indices before they meet the master
/// seed; the outer mix spreads the combination over all 64 bits. The result is
/// then expanded by the usual SplitMix64 state fill.
Rng derive_stream(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;
/// The 64-bit value derive_stream seeds with; recorded in per-trial CSV rows.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1]. Useful where a logarithm or negative power follows.
inline double uniform01_open_left(Rng& rng) noexcept {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Fisher-Yates, walking from the back; the draw order is part of the
/// reproducibility contract (std::shuffle is implementation-defined).
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace belyi
