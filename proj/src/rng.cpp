#include "belyi/rng.hpp"

#include <stdexcept>

namespace belyi {

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
  return mix64(master_seed ^ mix64(trial_index + 0x9E3779B97F4A7C15ULL));
}

Rng derive_stream(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
  return Rng(trial_seed(master_seed, trial_index));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace belyi
