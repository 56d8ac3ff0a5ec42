#pragma once

#include <cstdint>
#include <vector>

#include "permspec/bigint.hpp"

namespace permspec {

// Truncated formal power series with exact rational coefficients;
// coeff[m] is the coefficient of z^m.
struct RationalSeries {
    std::vector<Rat> coeff;

    explicit RationalSeries(int order = 0) : coeff(static_cast<std::size_t>(order) + 1, Rat(0)) {}
    int order() const { return static_cast<int>(coeff.size()) - 1; }

    const Rat& at(int m) const;  // throws if m exceeds the truncation order
};

// K(z) = sum_{m>=1} kappa_{2m} z^{2m} with
//   kappa_{2m} = 2 theta (2m(k-1)-1)! / (2m+2)!
// Odd coefficients are zero.
RationalSeries cumulant_series(int k, const Rat& theta, int order);

// exp of a series with zero constant term, to the same truncation order.
// Coefficients satisfy E_0 = 1, n E_n = sum_{i=1}^n i s_i E_{n-i}; equal to
// B_n(a_1,...,a_n)/n! with a_m = m! s_m (complete Bell polynomials).
RationalSeries series_exp(const RationalSeries& s);

struct MomentTable {
    int k = 2;
    Rat theta = 1;
    std::vector<Rat> moments;  // moments[m] = E[Y^m], m = 0..order

    const Rat& at(int m) const;
};

// Limiting moments of the normalized eigenangle count for fixed k > 1:
//   E[Y^m] = [z^m] exp(K(z)) * m! / (theta)_{m(k-1)}
// with (x)_j the rising factorial.
MomentTable limiting_moments(int k, const Rat& theta, int order);

// Independent route to the same moments: sum over partitions of m into even
// parts (m_1,...,m_s), with c_l parts equal to l:
//   E[Y^m] = (1/(theta)_{m(k-1)}) sum m!/prod c_l!
//            prod_l 2 theta (m_l(k-1)-1)! / (m_l+2)!
// Zero for odd m.
Rat limiting_moments_direct(int k, const Rat& theta, int m);

// Limiting moments for k = 1 (Gaussian with variance theta/6):
// 0 for odd m; m!/(2^{m/2} (m/2)!) (theta/6)^{m/2} for even m.
Rat gaussian_moment_k1(const Rat& theta, int m);

// m-th classical cumulant of the Poissonized limit: zero for odd m,
//   2 theta / ((k-1) m (m+1) (m+2))   for even m.
// The total canonical mass equals the second cumulant theta/(12(k-1)).
Rat poissonized_cumulant(int k, const Rat& theta, int m);

// Moments of the Poissonized limit via exp of the classical cumulant
// generating series.
std::vector<Rat> poissonized_moments(int k, const Rat& theta, int order);

// Limits for two intervals with pairwise independent irrational endpoints,
// k = 2, theta = 1.
struct CrossMomentTargets {
    Rat product_of_second_moments;  // lim E[Y1^2] E[Y2^2] = 1/144
    Rat joint_fourth;               // lim E[Y1^2 Y2^2] = 7/864
};
CrossMomentTargets cross_moment_targets();

}  // namespace permspec
