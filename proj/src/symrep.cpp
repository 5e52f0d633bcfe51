#include "belyi/symrep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <stdexcept>

namespace belyi {

namespace {

using Shape = std::uint64_t;

constexpr Shape bit(int i) { return Shape{1} << i; }

/// Drops beads at position 0 (zero-length rows) so every shape has a unique
/// encoding with exactly one bead per nonzero part.
Shape normalize(Shape shape) {
  while (shape & 1) shape >>= 1;
  return shape;
}

/// Calls visit(new_shape, height) for every rim hook of length `len`.
template <typename Visit>
void for_each_rim_hook(Shape shape, int len, Visit&& visit) {
  Shape beads = shape;
  while (beads) {
    const int b = std::countr_zero(beads);
    beads &= beads - 1;
    const int target = b - len;
    if (target < 0 || (shape & bit(target))) continue;
    const Shape between = shape & (bit(b) - 1) & ~(bit(target + 1) - 1);
    const int height = std::popcount(between);
    visit(normalize((shape ^ bit(b)) | bit(target)), height);
  }
}

void check_degree(int n) {
  if (n > kMaxCharacterDegree)
    throw std::invalid_argument("character routines support N <= " +
                                std::to_string(kMaxCharacterDegree));
}

}  // namespace

std::uint64_t encode_shape(const Partition& lambda) {
  check_degree(lambda.size());
  const int len = lambda.length();
  Shape shape = 0;
  for (int i = 0; i < len; ++i) shape |= bit(lambda[static_cast<std::size_t>(i)] + (len - 1 - i));
  return shape;
}

Partition decode_shape(std::uint64_t shape) {
  std::vector<int> beads;
  for (Shape s = shape; s; s &= s - 1) beads.push_back(std::countr_zero(s));
  std::reverse(beads.begin(), beads.end());
  const int len = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beads[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

HookGrid hook_grid(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  HookGrid grid;
  for (int i = 0; i < lambda.length(); ++i) {
    const int row = lambda[static_cast<std::size_t>(i)];
    std::vector<int> hooks(static_cast<std::size_t>(row));
    for (int j = 0; j < row; ++j)
      hooks[static_cast<std::size_t>(j)] = row + conj[static_cast<std::size_t>(j)] - i - j - 1;
    grid.push_back(std::move(hooks));
  }
  return grid;
}

BigInt dimension(const Partition& lambda) {
  BigInt product = 1;
  for (const auto& row : hook_grid(lambda))
    for (int h : row) product *= h;
  const BigInt total = factorial(static_cast<std::uint64_t>(lambda.size()));
  if (total % product != 0) throw std::logic_error("dimension: hook product does not divide N!");
  return total / product;
}

std::size_t CharacterEngine::KeyHash::operator()(
    const std::pair<std::uint64_t, std::string>& key) const noexcept {
  return std::hash<std::uint64_t>{}(key.first) * 0x9E3779B97F4A7C15ULL ^
         std::hash<std::string>{}(key.second);
}

BigInt CharacterEngine::character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                                " but |mu| = " + std::to_string(mu.size()));
  check_degree(lambda.size());
  std::string parts;
  for (int p : mu.parts()) parts.push_back(static_cast<char>(p));
  return general(encode_shape(lambda), parts, 0);
}

BigInt CharacterEngine::general(std::uint64_t shape, const std::string& parts, std::size_t from) {
  if (from == parts.size()) return shape == 0 ? BigInt(1) : BigInt(0);
  auto key = std::make_pair(shape, parts.substr(from));
  if (auto it = general_memo_.find(key); it != general_memo_.end()) return it->second;
  BigInt total = 0;
  for_each_rim_hook(shape, static_cast<unsigned char>(parts[from]), [&](Shape next, int height) {
    BigInt sub = general(next, parts, from + 1);
    if (height % 2) total -= sub;
    else total += sub;
  });
  general_memo_.emplace(std::move(key), total);
  return total;
}

BigInt CharacterEngine::rectangular(const Partition& lambda, int part) {
  if (part < 1) throw std::invalid_argument("rectangular character: part must be positive");
  check_degree(lambda.size());
  if (lambda.size() % part != 0) return 0;
  return rect(encode_shape(lambda), part);
}

BigInt CharacterEngine::rect(std::uint64_t shape, int part) {
  if (shape == 0) return 1;
  auto& memo = rect_memo_[part];
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  BigInt total = 0;
  for_each_rim_hook(shape, part, [&](Shape next, int height) {
    BigInt sub = rect(next, part);
    if (height % 2) total -= sub;
    else total += sub;
  });
  memo.emplace(shape, total);
  return total;
}

CharacterEngine::SignedCount CharacterEngine::rectangular_signed_count(const Partition& lambda,
                                                                       int part) {
  if (part < 1) throw std::invalid_argument("rectangular_signed_count: part must be positive");
  check_degree(lambda.size());
  if (lambda.size() % part != 0) return {0, 0};
  return rect_signed(encode_shape(lambda), part);
}

CharacterEngine::SignedCount CharacterEngine::rect_signed(std::uint64_t shape, int part) {
  if (shape == 0) return {1, 0};
  auto& memo = signed_memo_[part];
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  SignedCount total{0, 0};
  for_each_rim_hook(shape, part, [&](Shape next, int height) {
    const SignedCount sub = rect_signed(next, part);
    if (height % 2) {
      total.even += sub.odd;
      total.odd += sub.even;
    } else {
      total.even += sub.even;
      total.odd += sub.odd;
    }
  });
  memo.emplace(shape, total);
  return total;
}

std::size_t CharacterEngine::memo_entries() const noexcept {
  std::size_t total = general_memo_.size();
  for (const auto& m : rect_memo_) total += m.size();
  for (const auto& m : signed_memo_) total += m.size();
  return total;
}

void CharacterEngine::clear() {
  general_memo_.clear();
  for (auto& m : rect_memo_) m.clear();
  for (auto& m : signed_memo_) m.clear();
}

BigInt mn_character(const Partition& lambda, const CycleType& mu) {
  thread_local CharacterEngine engine;
  return engine.character(lambda, mu);
}

namespace {

using Rows = std::vector<int>;

BigInt count_rim_hook_tableaux(const Rows& rows, int part, std::map<Rows, BigInt>& memo) {
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  // Column heights of the diagram.
  std::vector<int> cols(static_cast<std::size_t>(rows.front()), 0);
  for (int r : rows)
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  BigInt total = 0;
  const int len = static_cast<int>(rows.size());
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) {
      const int arm = rows[static_cast<std::size_t>(i)] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
      if (arm + leg + 1 != part) continue;
      // The rim hook of cell (i, j) runs along the boundary from the end of
      // row i down to the bottom of column j. Removing it shifts each row in
      // i..i+leg-1 to the length of the row below minus one, and cuts row
      // i+leg back to j cells.
      Rows next = rows;
      for (int t = i; t < i + leg; ++t)
        next[static_cast<std::size_t>(t)] = rows[static_cast<std::size_t>(t + 1)] - 1;
      next[static_cast<std::size_t>(i + leg)] = j;
      while (!next.empty() && next.back() == 0) next.pop_back();
      total += count_rim_hook_tableaux(next, part, memo);
    }
  }
  memo.emplace(rows, total);
  return total;
}

}  // namespace

BigInt rim_hook_count(const Partition& lambda, int part) {
  if (part < 1) throw std::invalid_argument("rim_hook_count: part must be positive");
  if (lambda.size() % part != 0) return 0;
  std::map<Rows, BigInt> memo;
  return count_rim_hook_tableaux(lambda.parts(), part, memo);
}

std::vector<BigInt> rectangular_characters_serial(int n, int part) {
  CharacterEngine engine;
  std::vector<BigInt> out;
  for_each_partition(n, [&](const Partition& lambda) { out.push_back(engine.rectangular(lambda, part)); });
  return out;
}

std::vector<BigInt> rectangular_characters(int n, int part) {
  const auto labels = partitions(n);
  std::vector<BigInt> out(labels.size());
#pragma omp parallel
  {
    CharacterEngine engine;
#pragma omp for schedule(dynamic, 64)
    for (std::size_t i = 0; i < labels.size(); ++i) out[i] = engine.rectangular(labels[i], part);
  }
  return out;
}

std::vector<BigInt> dimensions(int n) {
  const auto labels = partitions(n);
  std::vector<BigInt> out(labels.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = dimension(labels[i]);
  return out;
}

namespace {

using State = std::unordered_map<Shape, BigInt>;

void descend(const State& state, int remaining, int max_part, std::vector<BigInt>& out) {
  if (remaining == 0) {
    auto it = state.find(0);
    out.push_back(it == state.end() ? BigInt(0) : it->second);
    return;
  }
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    State next;
    next.reserve(state.size());
    for (const auto& [shape, weight] : state) {
      for_each_rim_hook(shape, part, [&](Shape smaller, int height) {
        auto& slot = next[smaller];
        if (height % 2) slot -= weight;
        else slot += weight;
      });
    }
    std::erase_if(next, [](const auto& entry) { return entry.second == 0; });
    descend(next, remaining - part, part, out);
  }
}

State initial_state(int n, const ShapeWeights& weights) {
  check_degree(n);
  State state;
  for (const auto& [lambda, weight] : weights) {
    if (lambda.size() != n) throw std::invalid_argument("character_sums: weight on a shape of the wrong size");
    if (weight != 0) state[encode_shape(lambda)] += weight;
  }
  return state;
}

/// One first-level branch of the class trie: classes whose largest part is `part`.
std::vector<BigInt> branch(const State& root, int n, int part) {
  State next;
  for (const auto& [shape, weight] : root) {
    for_each_rim_hook(shape, part, [&](Shape smaller, int height) {
      auto& slot = next[smaller];
      if (height % 2) slot -= weight;
      else slot += weight;
    });
  }
  std::erase_if(next, [](const auto& entry) { return entry.second == 0; });
  std::vector<BigInt> out;
  descend(next, n - part, part, out);
  return out;
}

}  // namespace

std::vector<BigInt> character_sums_serial(int n, const ShapeWeights& weights) {
  const State root = initial_state(n, weights);
  std::vector<BigInt> out;
  if (n == 0) {
    descend(root, 0, 0, out);
    return out;
  }
  for (int part = n; part >= 1; --part) {
    auto piece = branch(root, n, part);
    out.insert(out.end(), std::make_move_iterator(piece.begin()), std::make_move_iterator(piece.end()));
  }
  return out;
}

std::vector<BigInt> character_sums(int n, const ShapeWeights& weights) {
  const State root = initial_state(n, weights);
  std::vector<BigInt> out;
  if (n == 0) {
    descend(root, 0, 0, out);
    return out;
  }
  std::vector<std::vector<BigInt>> pieces(static_cast<std::size_t>(n));
  // Branch i handles largest part n - i; small largest parts have the most classes.
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = n - 1; i >= 0; --i) pieces[static_cast<std::size_t>(i)] = branch(root, n, n - i);
  for (auto& piece : pieces)
    out.insert(out.end(), std::make_move_iterator(piece.begin()), std::make_move_iterator(piece.end()));
  return out;
}

CharacterTable character_table(int n) {
  CharacterTable table;
  table.labels = partitions(n);
  table.values.resize(table.labels.size());
  CharacterEngine engine;
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    for (const auto& mu : table.labels) table.values[i].push_back(engine.character(table.labels[i], mu));
  return table;
}

void write_character_table_csv(std::ostream& out, const CharacterTable& table) {
  out << "lambda,mu,chi\n";
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    for (std::size_t j = 0; j < table.labels.size(); ++j)
      out << table.labels[i].to_string() << ',' << table.labels[j].to_string() << ','
          << table.values[i][j] << '\n';
}

}  // namespace belyi
