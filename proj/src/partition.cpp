#include "belyi/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace belyi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be nonincreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  if (text == "0" || text.empty()) return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('+', pos), text.size());
    int value = 0;
    const auto field = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("Partition::parse: bad part in '" + std::string(text) + "'");
    parts.push_back(value);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int part, int count) {
  if (part <= 0 || count < 0) throw std::invalid_argument("Partition::rectangle: bad shape");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(largest()), 0);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> counts(static_cast<std::size_t>(size_) + 1, 0);
  for (int part : parts_) ++counts[static_cast<std::size_t>(part)];
  return counts;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void visit_rec(int remaining, int max_part, std::vector<int>& buffer,
               const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(buffer));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    buffer.push_back(part);
    visit_rec(remaining - part, part, buffer, visit);
    buffer.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: negative size");
  std::vector<int> buffer;
  buffer.reserve(static_cast<std::size_t>(n));
  visit_rec(n, n, buffer, visit);
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<BigInt> partition_counts(int n) {
  if (n < 0) throw std::invalid_argument("partition_counts: negative size");
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, BigInt(0));
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total)
      ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
  return ways;
}

BigInt partition_count(int n) { return partition_counts(n).back(); }

}  // namespace belyi
