#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace permspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// x (x-1) ... (x-n+1)
inline Int falling_factorial(const Int& x, std::int64_t n) {
    Int r = 1;
    for (std::int64_t i = 0; i < n; ++i) r *= (x - i);
    return r;
}

// x (x+1) ... (x+n-1), exact for rational x
inline Rat rising_factorial(const Rat& x, std::int64_t n) {
    Rat r = 1;
    for (std::int64_t i = 0; i < n; ++i) r *= (x + i);
    return r;
}

inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int ipow(Int base, std::int64_t e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int pow10(int digits) { return ipow(Int(10), digits); }

// floor(sqrt(x)) for x >= 0
inline Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// Stirling numbers of the second kind, S(n, r)
inline Int stirling2(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (n == 0) return r == 0 ? 1 : 0;
    // S(n, r) = r S(n-1, r) + S(n-1, r-1)
    std::vector<Int> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(r)];
}

}  // namespace permspec
