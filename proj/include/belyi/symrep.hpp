#pragma once

#include "belyi/bigint.hpp"
#include "belyi/partition.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace belyi {

/// Hook lengths h(i, j) = lambda_i + lambda'_j - i - j + 1 (1-based cells),
/// one row per part.
using HookGrid = std::vector<std::vector<int>>;

HookGrid hook_grid(const Partition& lambda);

/// f^lambda = N! / prod of hook lengths. Throws std::logic_error if the
/// division is not exact.
BigInt dimension(const Partition& lambda);

/// Largest N accepted by the character routines. Shapes are encoded as
/// 64-bit bead sets; the top bead of a partition of N sits at position
/// lambda_1 + length - 1 <= N.
inline constexpr int kMaxCharacterDegree = 63;

/// Memoized Murnaghan-Nakayama evaluator.
///
/// Shapes are held as beta-sets (first-column hook lengths) packed into a
/// 64-bit mask. Removing a rim hook of length r moves one bead from position
/// b to b - r; the hook height is the number of beads strictly between. Parts
/// of the class are consumed largest first, and memo keys combine the shape
/// with the remaining multiset of parts. Not thread-safe; use one engine per
/// worker.
class CharacterEngine {
 public:
  /// chi^lambda(mu). Throws std::invalid_argument if |lambda| != |mu| or the
  /// degree exceeds kMaxCharacterDegree.
  BigInt character(const Partition& lambda, const CycleType& mu);
  /// chi^lambda on the class k^{N/k}; 0 when k does not divide N.
  BigInt rectangular(const Partition& lambda, int part);

  /// Counts of k-rim-hook tableaux of shape lambda with even and odd height.
  struct SignedCount {
    BigInt even;
    BigInt odd;
  };
  SignedCount rectangular_signed_count(const Partition& lambda, int part);

  std::size_t memo_entries() const noexcept;
  void clear();

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::string>& key) const noexcept;
  };

  BigInt general(std::uint64_t shape, const std::string& parts, std::size_t from);
  BigInt rect(std::uint64_t shape, int part);
  SignedCount rect_signed(std::uint64_t shape, int part);

  std::unordered_map<std::pair<std::uint64_t, std::string>, BigInt, KeyHash> general_memo_;
  std::unordered_map<std::uint64_t, BigInt> rect_memo_[kMaxCharacterDegree + 1];
  std::unordered_map<std::uint64_t, SignedCount> signed_memo_[kMaxCharacterDegree + 1];
};

/// Bead-set encoding used by CharacterEngine; exposed for tests and tools.
std::uint64_t encode_shape(const Partition& lambda);
Partition decode_shape(std::uint64_t shape);

/// chi^lambda(mu) through a per-thread CharacterEngine.
BigInt mn_character(const Partition& lambda, const CycleType& mu);

/// f_k^lambda, the number of k-rim-hook tableaux of shape lambda, counted by
/// peeling rim hooks off the Young diagram cell by cell (a route independent
/// of the bead-set evaluator). 0 unless k divides |lambda|; f_1 = f^lambda.
BigInt rim_hook_count(const Partition& lambda, int part);

/// chi^lambda(k^{N/k}) for every lambda in partitions(N) order.
std::vector<BigInt> rectangular_characters(int n, int part);
std::vector<BigInt> rectangular_characters_serial(int n, int part);
/// f^lambda for every lambda in partitions(N) order.
std::vector<BigInt> dimensions(int n);

/// sum over lambda of weight(lambda) * chi^lambda(mu), for every mu ⊢ N in
/// partitions(N) order.
///
/// Evaluated for all classes at once: the weights are pushed down a trie of
/// class prefixes (parts largest first), stripping one rim hook per level, so
/// classes sharing a prefix share the work. The parallel variant splits the
/// trie at its first level.
using ShapeWeights = std::vector<std::pair<Partition, BigInt>>;
std::vector<BigInt> character_sums(int n, const ShapeWeights& weights);
std::vector<BigInt> character_sums_serial(int n, const ShapeWeights& weights);

/// Full character table, rows lambda and columns mu both in partitions(N)
/// order. Intended for N <= 20.
struct CharacterTable {
  std::vector<Partition> labels;
  std::vector<std::vector<BigInt>> values;
};
CharacterTable character_table(int n);
/// CSV with header "lambda,mu,chi" and partitions in "5+5+3+2" form.
void write_character_table_csv(std::ostream& out, const CharacterTable& table);

}  // namespace belyi
