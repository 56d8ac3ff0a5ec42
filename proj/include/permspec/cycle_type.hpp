#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "permspec/bigint.hpp"

namespace permspec {

// Multiset of cycle lengths of a permutation of [n].  The sufficient
// statistic for every spectrum computed by this library.
struct CycleType {
    std::int64_t n = 0;
    std::map<std::int64_t, std::int64_t> counts;  // cycle length -> count, no zero entries

    CycleType() = default;
    CycleType(std::int64_t n_, std::map<std::int64_t, std::int64_t> counts_);

    // Throws std::invalid_argument if sum(j * C_j) != n or an entry is invalid.
    void validate() const;

    std::int64_t total_cycles() const;

    // Cycle lengths in non-increasing order, one entry per cycle.
    std::vector<std::int64_t> parts_desc() const;

    bool operator==(const CycleType& o) const { return n == o.n && counts == o.counts; }
    bool operator<(const CycleType& o) const {
        return n != o.n ? n < o.n : counts < o.counts;
    }
};

// Cycle type of a permutation given in one-line notation with 1-based values:
// perm[i] = sigma(i+1).  Rejects non-bijective input.
CycleType cycle_type_of(const std::vector<std::int64_t>& one_line);

// Size of the conjugacy class of the given cycle type: n! / prod_j j^{C_j} C_j!
Int conjugacy_class_size(const CycleType& ct);

// All integer partitions of n as cycle types, paired with conjugacy class
// sizes.  Guarded by `bound` since the list grows super-polynomially.
std::vector<std::pair<CycleType, Int>> enumerate_cycle_types(std::int64_t n,
                                                             std::int64_t bound = 12);

}  // namespace permspec
