#include "permspec/ewens.hpp"

#include <stdexcept>
#include <vector>

namespace permspec {

EwensParams::EwensParams(std::int64_t n_, Rat theta_) : n(n_), theta(std::move(theta_)) {
    validate();
}

void EwensParams::validate() const {
    if (n < 1) throw std::invalid_argument("EwensParams: n must be positive");
    if (theta <= 0) throw std::invalid_argument("EwensParams: theta must be positive");
}

Rat ewens_class_probability(const CycleType& ct, const Rat& theta) {
    if (theta <= 0) throw std::invalid_argument("ewens_class_probability: theta must be positive");
    ct.validate();
    const Int cls = conjugacy_class_size(ct);
    Rat p = cls;
    Rat theta_pow = 1;
    for (std::int64_t i = 0; i < ct.total_cycles(); ++i) theta_pow *= theta;
    p *= theta_pow;
    p /= rising_factorial(theta, ct.n);
    return p;
}

Rat watterson_factorial_moment(std::int64_t n, const Rat& theta,
                               const std::map<std::int64_t, std::int64_t>& exponents) {
    if (n < 1) throw std::invalid_argument("watterson_factorial_moment: n must be positive");
    if (theta <= 0) throw std::invalid_argument("watterson_factorial_moment: theta must be positive");
    std::int64_t l = 0;
    for (const auto& [j, b] : exponents) {
        if (j < 1) throw std::invalid_argument("watterson_factorial_moment: invalid cycle length");
        if (b < 0) throw std::invalid_argument("watterson_factorial_moment: negative exponent");
        l += j * b;
    }
    if (l > n) return 0;
    Rat r = 1;
    for (const auto& [j, b] : exponents) {
        const Rat base = theta / j;
        for (std::int64_t i = 0; i < b; ++i) r *= base;
    }
    for (std::int64_t i = 0; i < l; ++i) r *= Rat(n - i) / (theta + n - i - 1);
    return r;
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
    return g.next();
}

CycleType sample_ewens(const EwensParams& params, std::uint64_t seed) {
    params.validate();
    const std::int64_t n = params.n;
    const Int num_big = boost::multiprecision::numerator(params.theta);
    const Int den_big = boost::multiprecision::denominator(params.theta);
    if (num_big > UINT32_MAX || den_big > UINT32_MAX)
        throw std::domain_error("sample_ewens: theta numerator/denominator too large");
    const std::uint64_t p = static_cast<std::uint64_t>(num_big);
    const std::uint64_t q = static_cast<std::uint64_t>(den_big);

    SplitMix64 rng(seed);
    // cycle_of[i] = index of the cycle containing element i+1
    std::vector<std::int32_t> cycle_of(static_cast<std::size_t>(n));
    std::vector<std::int64_t> lengths;
    lengths.reserve(32);
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::uint64_t bound = p + q * static_cast<std::uint64_t>(i - 1);
        const std::uint64_t u = rng.next_below(bound);
        if (u < p) {
            cycle_of[static_cast<std::size_t>(i - 1)] = static_cast<std::int32_t>(lengths.size());
            lengths.push_back(1);
        } else {
            const std::uint64_t e = (u - p) / q;  // uniform earlier element, 0-based
            const std::int32_t c = cycle_of[static_cast<std::size_t>(e)];
            cycle_of[static_cast<std::size_t>(i - 1)] = c;
            ++lengths[static_cast<std::size_t>(c)];
        }
    }
    CycleType ct;
    ct.n = n;
    for (std::int64_t len : lengths) ++ct.counts[len];
    return ct;
}

}  // namespace permspec
