#pragma once

#include "belyi/bigint.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace belyi {

/// A weakly decreasing sequence of positive integers.
///
/// Serves both as the label of an irreducible character of S_N and as the
/// cycle type of a permutation (see CycleType). Text form is "5+5+3+2"; the
/// empty partition prints as "0".
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is nonincreasing and positive.
  explicit Partition(std::vector<int> parts);

  static Partition from_unsorted(std::vector<int> parts);
  static Partition parse(std::string_view text);
  static Partition rectangle(int part, int count);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  /// a[i] = number of parts equal to i, for i in 0..size().
  std::vector<int> multiplicities() const;
  /// Sign of any permutation with this cycle type: (-1)^(N - number of parts).
  int sign() const noexcept { return ((size_ - length()) % 2 == 0) ? 1 : -1; }
  bool is_even() const noexcept { return sign() == 1; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts. partitions(n) yields the reverse of this order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using CycleType = Partition;

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Visits every partition of n once, in reverse lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ...
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions(int n);

/// p(n) by the coin-change recurrence over part sizes; exact.
BigInt partition_count(int n);
/// p(0..n) in one pass.
std::vector<BigInt> partition_counts(int n);

}  // namespace belyi
