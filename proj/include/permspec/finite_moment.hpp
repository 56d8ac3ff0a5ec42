#pragma once

#include <cstdint>

#include "permspec/angle.hpp"
#include "permspec/bigint.hpp"

namespace permspec {

// Exact E[(Y_{n,k})^m] under Ewens(theta), where
//   Y_{n,k} = sum_j j^{k-1} C_j ({j alpha} - {j beta}) / n^{k-1}.
//
// Expands Y^m by the multinomial theorem over partitions of m, converts
// powers of cycle counts to falling factorials with Stirling numbers, and
// evaluates the resulting factorial moments with Watterson's formula.  The
// sums over distinct indices are resolved by partition-lattice inclusion-
// exclusion and truncated convolutions, so the cost is O(n^2) for m <= 2.
//
// Cost bounds (throws std::domain_error beyond them):
//   m <= 2 for n <= 5000;  m in {3, 4} for n <= 150.
Rat finite_n_moment(std::int64_t n, int k, const Rat& theta, const Interval& I, int m);

}  // namespace permspec
