#pragma once

#include <cstdint>
#include <map>

#include "permspec/bigint.hpp"
#include "permspec/cycle_type.hpp"

namespace permspec {

struct EwensParams {
    std::int64_t n = 1;
    Rat theta = 1;

    EwensParams() = default;
    EwensParams(std::int64_t n_, Rat theta_);
    void validate() const;  // theta > 0, n >= 1
};

// P(conjugacy class of ct) under Ewens(theta):
//   (n! / prod_j j^{C_j} C_j!) * theta^{K} / (theta (theta+1) ... (theta+n-1))
Rat ewens_class_probability(const CycleType& ct, const Rat& theta);

// Watterson's factorial-moment formula.  `exponents` maps cycle length j to
// b_j; with l = sum(j b_j) the result is
//   1(l <= n) * prod_j (theta/j)^{b_j} * prod_{i=0}^{l-1} (n-i)/(theta+n-i-1)
Rat watterson_factorial_moment(std::int64_t n, const Rat& theta,
                               const std::map<std::int64_t, std::int64_t>& exponents);

// splitmix64: the 64-bit mixing generator of Steele, Lea and Flood.  Small,
// seedable and counter-friendly; the algorithm name is recorded in experiment
// metadata so runs can be reproduced independently of this implementation.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Seed for the RNG stream of one task/sample.  A pure function of
// (master, index) so results do not depend on worker scheduling.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

// Draws a cycle type from the Ewens(theta) measure on S_n via the Chinese
// restaurant process: element i starts a new cycle with probability
// theta/(theta+i-1), otherwise it joins the cycle of a uniformly chosen
// earlier element.  O(n), never materializes the permutation word.
// Deterministic in (params, seed).
CycleType sample_ewens(const EwensParams& params, std::uint64_t seed);

}  // namespace permspec
