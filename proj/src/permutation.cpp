#include "belyi/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace belyi {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<std::uint8_t> seen(images_.size(), 0);
  for (Index image : images_) {
    if (image >= images_.size() || seen[image])
      throw std::invalid_argument("Permutation: images do not form a bijection");
    seen[image] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Index> images(degree);
  std::iota(images.begin(), images.end(), Index{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Index>>& cycles,
                                     std::size_t degree) {
  std::vector<Index> images(degree);
  std::iota(images.begin(), images.end(), Index{0});
  std::vector<std::uint8_t> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Index from = cycle[i];
      if (from >= degree) throw std::invalid_argument("Permutation: point exceeds degree");
      if (used[from]) throw std::invalid_argument("Permutation: point repeated across cycles");
      used[from] = 1;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Index>> cycles;
  std::size_t largest = 0;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("Permutation::parse: expected '('");
    ++pos;
    std::vector<Index> cycle;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space();
      continue;
    }
    while (true) {
      skip_space();
      unsigned long value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || value == 0)
        throw std::invalid_argument("Permutation::parse: expected positive integer");
      pos = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(static_cast<Index>(value - 1));
      largest = std::max<std::size_t>(largest, value);
      skip_space();
      if (pos >= text.size()) throw std::invalid_argument("Permutation::parse: unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("Permutation::parse: unexpected character");
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  if (degree == 0) degree = largest;
  if (largest > degree) throw std::invalid_argument("Permutation::parse: point exceeds degree");
  return from_cycles(cycles, degree);
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Index>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::cycle_count() const {
  std::vector<std::uint8_t> visited;
  return cycle_lengths(images_, visited).size();
}

int Permutation::sign() const {
  return ((degree() - cycle_count()) % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<Permutation::Index>> Permutation::cycles() const {
  std::vector<std::vector<Index>> out;
  std::vector<std::uint8_t> visited(images_.size(), 0);
  // Scanning starts in increasing order, so each cycle begins at its minimum
  // and the list is sorted by minimum.
  for (Index start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::vector<Index> cycle;
    for (Index i = start; !visited[i]; i = images_[i]) {
      visited[i] = 1;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  std::vector<Permutation::Index> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = p(q(static_cast<Permutation::Index>(i)));
  return Permutation(std::move(images));
}

std::vector<int> cycle_lengths(std::span<const Permutation::Index> images,
                               std::vector<std::uint8_t>& visited) {
  visited.assign(images.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (std::size_t i = start; !visited[i]; i = images[i]) {
      visited[i] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::uint8_t> visited;
  return CycleType(cycle_lengths(p.images(), visited));
}

BigInt class_size(const CycleType& t) {
  BigInt denominator = 1;
  const auto counts = t.multiplicities();
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    denominator *= pow_big(BigInt(i), static_cast<std::uint64_t>(counts[i]));
    denominator *= factorial(static_cast<std::uint64_t>(counts[i]));
  }
  return factorial(static_cast<std::uint64_t>(t.size())) / denominator;
}

BigInt alternating_class_count(const CycleType& t) {
  return t.is_even() ? class_size(t) : BigInt(0);
}

Permutation sample_uniform_class(std::size_t degree, std::size_t part, Rng& rng) {
  if (part == 0 || degree % part != 0)
    throw std::invalid_argument("sample_uniform_class: part " + std::to_string(part) +
                                " does not divide degree " + std::to_string(degree));
  std::vector<Permutation::Index> order(degree);
  std::iota(order.begin(), order.end(), Permutation::Index{0});
  shuffle(std::span(order), rng);
  std::vector<Permutation::Index> images(degree);
  for (std::size_t block = 0; block < degree; block += part)
    for (std::size_t j = 0; j < part; ++j)
      images[order[block + j]] = order[block + (j + 1) % part];
  return Permutation(std::move(images));
}

Permutation sample_uniform_permutation(std::size_t degree, Rng& rng) {
  std::vector<Permutation::Index> images(degree);
  std::iota(images.begin(), images.end(), Permutation::Index{0});
  shuffle(std::span(images), rng);
  return Permutation(std::move(images));
}

}  // namespace belyi
