#pragma once

#include "belyi/bigint.hpp"
#include "belyi/partition.hpp"
#include "belyi/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace belyi {

/// A bijection of {0, ..., N-1}, stored as its image array.
///
/// Indices are 0-based internally and 1-based in cycle notation. The text form
/// lists nontrivial cycles sorted by their smallest element, each rotated to
/// start there: "(1,12,6)(2,3,7)(4,5,10)(8,9,11)". The identity prints as "()".
class Permutation {
 public:
  using Index = std::uint32_t;

  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t degree);
  /// Parses 1-based cycle notation. Points not mentioned are fixed; `degree`
  /// of 0 means "largest point mentioned".
  static Permutation parse(std::string_view text, std::size_t degree = 0);
  static Permutation from_cycles(const std::vector<std::vector<Index>>& cycles, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Index operator()(Index i) const { return images_[i]; }
  std::span<const Index> images() const noexcept { return images_; }

  Permutation inverse() const;
  std::size_t cycle_count() const;
  int sign() const;
  /// Canonical 0-based cycles including fixed points.
  std::vector<std::vector<Index>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

/// Right-to-left product: compose(p, q)(i) = p(q(i)), so q acts first.
///
/// With this order compose(beta, alpha) reproduces the face permutation of the
/// permutational model exactly; the other order traces right-hand turns.
/// Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

CycleType cycle_type(const Permutation& p);
/// Cycle lengths of a raw image array (no bijection check), sorted
/// nonincreasing. `visited` is scratch space resized as needed.
std::vector<int> cycle_lengths(std::span<const Permutation::Index> images,
                               std::vector<std::uint8_t>& visited);

/// |C(t)| = N! / prod_i i^{a_i} a_i!.
BigInt class_size(const CycleType& t);
/// Number of elements of A_N with cycle type t: class_size(t) when t is even,
/// otherwise 0. Relative to the uniform measure on A_N the class has
/// probability 2 * class_size(t) / N!.
BigInt alternating_class_count(const CycleType& t);

/// Uniform element of the class r^{N/r}: shuffle 0..N-1, cut into consecutive
/// blocks of length r, read each block as a cycle.
Permutation sample_uniform_class(std::size_t degree, std::size_t part, Rng& rng);

/// Uniform element of S_N.
Permutation sample_uniform_permutation(std::size_t degree, Rng& rng);

}  // namespace belyi
