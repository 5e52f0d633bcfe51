#pragma once

// Reference computations that share no code path with the library routines
// they check.

#include "belyi/bigint.hpp"
#include "belyi/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace belyi::oracle {

/// Standard Young tableaux counted by removing the cell holding the largest
/// entry (an outer corner) in every possible way.
BigInt syt_count(const std::vector<int>& shape);

/// p(n) by Euler's pentagonal recurrence.
std::vector<BigInt> partition_counts_pentagonal(int n);

/// Cycle type of a permutation in one-line notation (0-based), nonincreasing.
std::vector<int> cycle_type_of(const std::vector<int>& images);

/// Law of the cycle type of b*a over every b of type part^{n/part} and every
/// a of type 2^{n/2}, found by listing all of S_n (n <= 8). Keys are
/// nonincreasing cycle types; products are read right to left.
std::map<std::vector<int>, Rational> brute_force_product_law(int n, int part);

/// Number of perfect matchings of 2m points, by listing them (m <= 6).
std::uint64_t count_matchings(int points);

/// Class function values of six low shapes from their character polynomials in
/// the cycle counts a1, a2, a3 of the class. `row` is one of
/// "(N-1,1)", "(N-2,2)", "(N-2,1,1)", "(N-3,3)", "(N-3,2,1)", "(N-3,1,1,1)".
BigInt character_polynomial(const std::string& row, long a1, long a2, long a3);

/// Sum of (f^lambda)^{-t} over lambda of n with lambda_1, lambda'_1 <= n - m,
/// using syt_count and 50-digit binary floating point.
double dimension_sum(int n, int m, double t);

}  // namespace belyi::oracle
