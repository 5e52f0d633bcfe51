#include "belyi/bounds.hpp"

#include "belyi/symrep.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace belyi {

PartitionBoundReport partition_count_bound_check(int r_max) {
  if (r_max < 1 || r_max > 500) throw std::invalid_argument("partition_count_bound_check: need 1 <= r_max <= 500");
  const auto counts = partition_counts(r_max);
  PartitionBoundReport report;
  report.r_max = r_max;
  for (int r = 1; r <= r_max; ++r) {
    const double log_bound = std::numbers::pi * std::sqrt(2.0 * r / 3.0);
    const double log_ratio = log_big(counts[static_cast<std::size_t>(r)]) - log_bound;
    const double ratio = std::exp(log_ratio);
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax = r;
    }
    if (log_ratio > 0.0) {
      report.holds = false;
      report.violations.push_back(r);
    }
  }
  return report;
}

FominLulovReport fomin_lulov_check(int n, int part) {
  if (part < 1 || n % part != 0 || n > 24)
    throw std::invalid_argument("fomin_lulov_check: need k | N and N <= 24");
  const int blocks = n / part;
  FominLulovReport report;
  report.n = n;
  report.part = part;
  const BigInt n_factorial = factorial(static_cast<std::uint64_t>(n));
  const BigInt rhs_factor = pow_big(factorial(static_cast<std::uint64_t>(blocks)), static_cast<std::uint64_t>(part)) *
                            pow_big(BigInt(part), static_cast<std::uint64_t>(n));
  report.tightest_ratio = -1.0;
  for_each_partition(n, [&](const Partition& lambda) {
    const BigInt rim = rim_hook_count(lambda, part);
    const BigInt dim = dimension(lambda);
    const BigInt lhs = pow_big(rim, static_cast<std::uint64_t>(part)) * n_factorial;
    const BigInt rhs = rhs_factor * dim;
    ++report.checked;
    if (lhs <= rhs) ++report.holding;
    else report.violations.push_back(lambda);
    const double ratio = rim == 0 ? 0.0 : std::exp(log_ratio(lhs, rhs) / part);
    if (ratio > report.tightest_ratio) {
      report.tightest_ratio = ratio;
      report.tightest = lambda;
    }
  });
  return report;
}

namespace {

double log_factorial(double x) { return std::lgamma(x + 1.0); }

void tally(LowerBoundTally& t, const Partition& lambda, double log_dim, double log_bound) {
  ++t.applicable;
  if (log_dim + 1e-9 >= log_bound) ++t.holding;
  else t.failures.push_back({lambda, log_dim, log_bound});
}

}  // namespace

LowerBoundsReport dimension_lower_bounds_check(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("dimension_lower_bounds_check: need 1 <= N <= 64");
  LowerBoundsReport report;
  report.n = n;
  const double big_n = n;
  for_each_partition(n, [&](const Partition& lambda) {
    ++report.partitions;
    const int first = lambda.largest();
    const int height = lambda.length();
    const BigInt dim = dimension(lambda);
    const double log_dim = log_big(dim);
    if (2 * first > n) {
      const BigInt bound = binomial(static_cast<std::uint64_t>(first), static_cast<std::uint64_t>(n - first));
      ++report.binomial.applicable;
      if (dim >= bound) ++report.binomial.holding;
      else report.binomial.failures.push_back({lambda, log_dim, log_big(bound)});
    }
    if (8 * first >= n) {
      const double log_bound = log_factorial(17.0 * big_n / 16.0 - first) -
                               log_factorial(big_n - first) - log_factorial(big_n / 16.0 + 16.0);
      tally(report.factorial, lambda, log_dim, log_bound);
    }
    if (height <= first && 8 * first < n) {
      const double log_bound = big_n * (std::log(4.0) - 1.0);
      tally(report.exponential, lambda, log_dim, log_bound);
    }
  });
  return report;
}

HighPrec prop42_sum(int n, int margin, double exponent) {
  if (n < 1 || n > 60 || margin < 1 || !(exponent > 0.0))
    throw std::invalid_argument("prop42_sum: need 1 <= N <= 60, m >= 1, t > 0");
  HighPrec total = 0;
  const HighPrec t = exponent;
  for_each_partition(n, [&](const Partition& lambda) {
    if (lambda.largest() > n - margin || lambda.length() > n - margin) return;
    total += boost::multiprecision::pow(HighPrec(dimension(lambda)), -t);
  });
  return total;
}

namespace {

struct PrintedRow {
  const char* name;
  std::vector<int> tail;  // parts after the first, which is N - sum(tail)
  // Printed entries as (numerator(N), denominator).
  BigInt (*dim_numerator)(long long);
  int dim_denominator;
  // Character columns C2, C3, C4, C5: value = a*N/r + b, stored as (a, b).
  std::array<std::pair<int, int>, 4> characters;
};

const std::vector<PrintedRow>& printed_table() {
  static const std::vector<PrintedRow> rows = {
      {"(N-1,1)", {1}, [](long long N) { return BigInt(N - 1); }, 1,
       {{{0, 1}, {0, 1}, {0, 1}, {0, 1}}}},
      {"(N-2,2)", {2}, [](long long N) { return BigInt(N * (N - 3)); }, 2,
       {{{1, 0}, {0, 0}, {0, 1}, {0, 1}}}},
      {"(N-2,1,1)", {1, 1}, [](long long N) { return BigInt((N - 1) * (N - 2)); }, 2,
       {{{1, 1}, {0, 1}, {0, 1}, {0, 1}}}},
      {"(N-3,2,1)", {2, 1}, [](long long N) { return BigInt(N * (N - 2) * (N - 4)); }, 3,
       {{{0, 0}, {1, 1}, {0, 0}, {0, 1}}}},
      {"(N-3,1,1,1)", {1, 1, 1}, [](long long N) { return BigInt((N - 1) * (N - 2) * (N - 3)); }, 3,
       {{{1, 1}, {1, -1}, {0, 1}, {0, 1}}}},
      {"(N-3,3)", {3}, [](long long N) { return BigInt(N * (N - 1) * (N - 5)); }, 6,
       {{{1, 2}, {1, 1}, {0, 0}, {0, 0}}}},
  };
  return rows;
}

}  // namespace

Table1Report table1_verify(int n) {
  if (n < 6 || n > kMaxCharacterDegree) throw std::invalid_argument("table1_verify: need 6 <= N <= 63");
  Table1Report report;
  report.n = n;
  CharacterEngine engine;
  for (const auto& row : printed_table()) {
    std::vector<int> parts{n};
    for (int p : row.tail) {
      parts.front() -= p;
      parts.push_back(p);
    }
    const Partition lambda(parts);

    TableCell dim_cell;
    dim_cell.row = row.name;
    dim_cell.column = "f";
    dim_cell.lambda = lambda;
    const BigInt numerator = row.dim_numerator(n);
    dim_cell.printed = numerator / row.dim_denominator;
    dim_cell.computed = dimension(lambda);
    dim_cell.match = (numerator % row.dim_denominator == 0) && dim_cell.printed == dim_cell.computed;
    report.cells.push_back(dim_cell);

    for (int r = 2; r <= 5; ++r) {
      if (n % r != 0) continue;
      const auto [a, b] = row.characters[static_cast<std::size_t>(r - 2)];
      TableCell cell;
      cell.row = row.name;
      cell.column = "C" + std::to_string(r);
      cell.lambda = lambda;
      cell.printed = BigInt(a * (n / r) + b);
      const BigInt chi = engine.rectangular(lambda, r);
      cell.sign = chi > 0 ? 1 : (chi < 0 ? -1 : 0);
      cell.computed = abs(chi);
      cell.match = cell.printed == cell.computed;
      report.cells.push_back(cell);
    }
  }
  for (const auto& cell : report.cells)
    if (!cell.match) ++report.mismatches;
  return report;
}

}  // namespace belyi
