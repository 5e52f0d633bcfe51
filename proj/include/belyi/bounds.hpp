#pragma once

#include "belyi/bigint.hpp"
#include "belyi/partition.hpp"

#include <string>
#include <vector>

namespace belyi {

/// p(r) <= exp(pi sqrt(2r/3)) for 1 <= r <= r_max (r_max <= 500).
struct PartitionBoundReport {
  int r_max = 0;
  bool holds = true;
  /// max over r of p(r) / exp(pi sqrt(2r/3)), and where it occurs.
  double max_ratio = 0.0;
  int argmax = 0;
  std::vector<int> violations;
};
PartitionBoundReport partition_count_bound_check(int r_max);

/// (f_k^lambda)^k (kn)! <= (n!)^k k^{kn} f^lambda for every lambda of N = kn,
/// compared as exact integers (N <= 24).
struct FominLulovReport {
  int n = 0;
  int part = 0;
  int checked = 0;
  int holding = 0;
  /// max over lambda of f_k / bound (the un-powered ratio), and its shape.
  double tightest_ratio = 0.0;
  Partition tightest;
  std::vector<Partition> violations;
};
FominLulovReport fomin_lulov_check(int n, int part);

/// Three lower bounds on f^lambda:
///   A: f >= C(lambda_1, N - lambda_1)                   when lambda_1 > N/2 (exact)
///   B: f >= (17N/16 - lambda_1)! / ((N - lambda_1)! (N/16 + 16)!)
///                                                       when lambda_1 >= N/8
///   C: f >= (4/e)^N                                     when lambda'_1 <= lambda_1 < N/8
/// B and C are compared in log space (factorials of non-integers through
/// lgamma) with 1e-9 slack.
struct LowerBoundCase {
  Partition lambda;
  double log_dimension = 0.0;
  double log_bound = 0.0;
};
struct LowerBoundTally {
  int applicable = 0;
  int holding = 0;
  std::vector<LowerBoundCase> failures;
};
struct LowerBoundsReport {
  int n = 0;
  int partitions = 0;
  LowerBoundTally binomial;   // A
  LowerBoundTally factorial;  // B (asymptotic; may fail at small N)
  LowerBoundTally exponential;  // C
};
LowerBoundsReport dimension_lower_bounds_check(int n);

/// sum of (f^lambda)^{-t} over lambda ⊢ N with lambda_1, lambda'_1 <= N - m.
/// Each term is formed from the exact dimension in 60-digit arithmetic.
HighPrec prop42_sum(int n, int margin, double exponent);

/// Cell of the character/dimension table checked for N in {12, 18, 24, ...}.
struct TableCell {
  std::string row;     // "(N-2,1,1)"
  std::string column;  // "f", "C2", "C3", "C4", "C5"
  Partition lambda;
  BigInt printed;
  BigInt computed;     // |chi| for character columns, f for "f"
  int sign = 1;        // sign of the character value (0 if it vanishes)
  bool match = false;
};
struct Table1Report {
  int n = 0;
  std::vector<TableCell> cells;
  int mismatches = 0;
};
/// Compares the six low rows of the published dimension/character table
/// with hook-length dimensions and |MN| values. Character columns r = 2, 3, 4
/// and 5 are checked whenever r divides N. Requires N >= 6.
Table1Report table1_verify(int n);

}  // namespace belyi
