#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "permspec/angle.hpp"
#include "permspec/bigint.hpp"
#include "permspec/cycle_type.hpp"

namespace permspec {

// Cycle type of an induced permutation.  Lengths are lcms of base cycle
// lengths and can exceed 64 bits for large n, so everything is big-integer.
struct SpectrumCycleType {
    Int total = 0;                // degree of the induced permutation
    std::map<Int, Int> counts;    // induced cycle length -> multiplicity

    void add(const Int& length, const Int& multiplicity);
    Int computed_total() const;   // sum of length * multiplicity
    bool operator==(const SpectrumCycleType& o) const {
        return total == o.total && counts == o.counts;
    }
};

struct NecklaceCounts {
    Int total = 0;                        // N_{length, ones}
    Int aperiodic = 0;                    // L_{length, ones}
    std::map<std::int64_t, Int> by_period;  // d -> N_{length, ones}^d (nonzero entries)
};

// Binary necklaces of the given length with the given number of ones:
//   L_{n,i} = (1/n) sum_{d | (n,i)} mu(d) C(n/d, i/d)
//   N_{n,i} = (1/n) sum_{d | (n,i)} phi(d) C(n/d, i/d)
//   N_{n,i}^d = L_{d, i d / n} when n | i d and d | n, else 0
NecklaceCounts necklace_counts(std::int64_t length, std::int64_t ones);

// Cycle type of the permutation induced on ordered k-tuples of distinct
// elements.  For each way of grouping the k tuple positions by shared base
// cycle (nested set partitions of [k]) and each injective assignment of
// distinct base cycle lengths (i_1,...,i_m) to the groups, the class
// contributes
//   (1/lcm) prod_r C_{i_r}^(falling p(r)) prod_s i_r^(falling k_rs)
// cycles of length lcm(i_1,...,i_m).  Iteration runs over the lengths
// present in ct only, so cost is polynomial in the number of distinct
// lengths.  Total degree: n (n-1) ... (n-k+1).
SpectrumCycleType induced_tuple_cycle_type(const CycleType& ct, int k, int k_bound = 5);

// Cycle type of the permutation induced on unordered k-subsets.  Sums over
// double partitions of the integer k and, per cycle class, over the valid
// periods d of the binary necklaces cut out by the subset:
//   sum_d (1/lcm(d)) prod_r [ C_{i_r}^(falling p(r)) / prod_i c_{r,i}! ]
//                     prod_s d_rs N_{i_r, k_rs}^{d_rs}
// cycles of length lcm over all d_rs.  Total degree: C(n, k).
SpectrumCycleType induced_subset_cycle_type(const CycleType& ct, int k, int k_bound = 5);

enum class ActionKind { Tuple, Subset };

// Oracle: materializes the induced permutation and walks its cycles.
// Requires degree <= 10^6.
SpectrumCycleType brute_force_induced(const std::vector<std::int64_t>& one_line, int k,
                                      ActionKind kind);

// Exact number of eigenangles of the spectrum inside (alpha, beta): a cycle
// of length L carries angles {0, 1/L, ..., (L-1)/L}, of which
// floor(L beta) - floor(L alpha) lie in the interval (endpoints in (0,1)).
Int count_in_interval(const SpectrumCycleType& spec, const Interval& I);

// ---------------------------------------------------------------------------
// Angle-sum multisets (descent-set machinery for the hook irrep)

// Exact angle multiset over a common denominator.
struct AngleMultiset {
    Int denom = 1;
    std::map<Int, Int> counts;  // numerator in [0, denom) -> multiplicity

    void add(const Int& numerator, const Int& multiplicity = 1);
    Int total() const;
    bool operator==(const AngleMultiset& o) const;

    AngleMultiset translated(const Int& shift_num) const;  // shift by shift_num/denom
    void merge(const AngleMultiset& o, const Int& copies = 1);
};

Int count_in_interval(const AngleMultiset& angles, const Interval& I);

// Eigenangles of the defining representation listed by cycle, cycle lengths
// in non-increasing order.  Entry i holds the numerator of the angle over
// `denom` (cycle ends carry 0).
struct ByCycleAngles {
    Int denom = 1;
    std::vector<Int> nums;  // size n
};

ByCycleAngles by_cycle_angles(const CycleType& ct);

// Multiset of angle sums over k-subsets / k-tuples (distinct entries) drawn
// from the first `m` positions of b.  Enumeration-based; intended for small
// n test oracles and the hook-irrep spectrum.
AngleMultiset subset_sum_multiset(const ByCycleAngles& b, std::int64_t m, int k);
AngleMultiset tuple_sum_multiset(const ByCycleAngles& b, std::int64_t m, int k);

// Same as tuple_sum_multiset over the full index range but skipping one
// position (1-based).
AngleMultiset tuple_sum_multiset_avoiding(const ByCycleAngles& b, std::int64_t avoid, int k);

// Angle sums over k-tuples from [n]^k with exactly two equal entries.
AngleMultiset duplicate_sum_multiset(const ByCycleAngles& b, int k);

// Eigenangle multiset of the hook irrep S^(n-k, 1^k): sums of b over
// k-subsets of [n-1], exactly C(n-1, k) angles.  Guarded by an enumeration
// bound on C(n-1, k).
AngleMultiset hook_irrep_angle_index(const CycleType& ct, int k,
                                     const Int& enum_bound = Int(10000000));

// Number of hook-irrep eigenangles in I.  k = 1 and k = 2 use closed-form
// per-cycle-pair counting (no enumeration); larger k enumerates under the
// bound.
Int hook_irrep_interval_count(const CycleType& ct, int k, const Interval& I,
                              const Int& enum_bound = Int(10000000));

// ---------------------------------------------------------------------------
// Normalized eigenangle statistics

// sum_j j^{k-1} C_j ({j alpha} - {j beta}) / n^{k-1}
Rat y_statistic_exact(const CycleType& ct, int k, const Interval& I);
double y_statistic(const CycleType& ct, int k, const Interval& I);

enum class RepMode { Tuple, Set, Irrep };

// Raw eigenangle count X of the chosen representation in I.
Int rep_interval_count(const CycleType& ct, int k, const Interval& I, RepMode mode,
                       const Int& irrep_enum_bound = Int(10000000));

// (X - centering)/n^{k-1}, times k! for Set and Irrep modes.
double y_rep_statistic(const CycleType& ct, int k, const Interval& I, RepMode mode,
                       double centering, const Int& irrep_enum_bound = Int(10000000));

// E[X] under Ewens(theta), by exact Watterson summation.  Supported when the
// O(n^k) assignment sweep is affordable (n <= 300 and n^k <= 4*10^6; Irrep
// requires k <= 2).  Throws std::domain_error otherwise.
Rat expected_rep_interval_count(std::int64_t n, int k, const Rat& theta, const Interval& I,
                                RepMode mode);

// ---------------------------------------------------------------------------
// Trapezoidal-rule statistics for general periodic f

// R_j(f) = (1/j)( f(0)/2 + sum_{i=1}^{j-1} f(i/j) + f(1)/2 ) - integral,
// the trapezoidal quadrature error of f over [0,1].
double trapezoid_error(const std::function<double(double)>& f, std::int64_t j, double integral);
double trapezoid_error(const std::function<double(double)>& f, std::int64_t j);

// sum_j C_j j^k R_j(f) / n^{k-1}; reduces to y_statistic when f is the
// indicator of (alpha, beta), since j R_j = {j alpha} - {j beta} there.
double y_statistic_f(const CycleType& ct, int k, const std::function<double(double)>& f,
                     double integral);
double y_statistic_f(const CycleType& ct, int k, const std::function<double(double)>& f);

}  // namespace permspec
