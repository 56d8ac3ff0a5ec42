#include "permspec/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace permspec {

const Rat& RationalSeries::at(int m) const {
    if (m < 0 || m > order())
        throw std::out_of_range("RationalSeries: coefficient " + std::to_string(m) +
                                " beyond truncation order " + std::to_string(order()));
    return coeff[static_cast<std::size_t>(m)];
}

const Rat& MomentTable::at(int m) const {
    if (m < 0 || m >= static_cast<int>(moments.size()))
        throw std::out_of_range("MomentTable: moment " + std::to_string(m) +
                                " beyond computed order");
    return moments[static_cast<std::size_t>(m)];
}

RationalSeries cumulant_series(int k, const Rat& theta, int order) {
    if (k < 2) throw std::invalid_argument("cumulant_series: requires k >= 2");
    if (theta <= 0) throw std::invalid_argument("cumulant_series: theta must be positive");
    RationalSeries s(order);
    for (int m = 1; 2 * m <= order; ++m) {
        const Int num = 2 * factorial(2 * m * (k - 1) - 1);
        s.coeff[static_cast<std::size_t>(2 * m)] = theta * Rat(num, factorial(2 * m + 2));
    }
    return s;
}

RationalSeries series_exp(const RationalSeries& s) {
    if (s.coeff.empty() || s.coeff[0] != 0)
        throw std::invalid_argument("series_exp: series must have zero constant term");
    const int order = s.order();
    RationalSeries e(order);
    e.coeff[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rat acc = 0;
        for (int i = 1; i <= n; ++i)
            acc += Rat(i) * s.coeff[static_cast<std::size_t>(i)] *
                   e.coeff[static_cast<std::size_t>(n - i)];
        e.coeff[static_cast<std::size_t>(n)] = acc / n;
    }
    return e;
}

MomentTable limiting_moments(int k, const Rat& theta, int order) {
    const RationalSeries expk = series_exp(cumulant_series(k, theta, order));
    MomentTable t;
    t.k = k;
    t.theta = theta;
    t.moments.resize(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        t.moments[static_cast<std::size_t>(m)] = expk.coeff[static_cast<std::size_t>(m)] *
                                                 Rat(factorial(m)) /
                                                 rising_factorial(theta, m * (k - 1));
    }
    return t;
}

namespace {

void even_partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        emit(parts);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 2; p -= 2) {
        parts.push_back(p);
        even_partitions_rec(remaining - p, p, parts, emit);
        parts.pop_back();
    }
}

}  // namespace

Rat limiting_moments_direct(int k, const Rat& theta, int m) {
    if (k < 2) throw std::invalid_argument("limiting_moments_direct: requires k >= 2");
    if (m < 0) throw std::invalid_argument("limiting_moments_direct: m must be >= 0");
    if (m > 30) throw std::domain_error("limiting_moments_direct: m exceeds bound 30");
    if (m == 0) return 1;
    if (m % 2 == 1) return 0;
    Rat sum = 0;
    std::vector<int> parts;
    const int even_max = m - (m % 2);
    even_partitions_rec(m, even_max, parts, [&](const std::vector<int>& ps) {
        Rat term = Rat(factorial(m));
        // divide by multiplicities factorial
        int run = 1;
        for (std::size_t i = 1; i <= ps.size(); ++i) {
            if (i < ps.size() && ps[i] == ps[i - 1]) {
                ++run;
            } else {
                term /= Rat(factorial(run));
                run = 1;
            }
        }
        for (int p : ps) {
            term *= 2 * theta * Rat(factorial(p * (k - 1) - 1), factorial(p + 2));
        }
        sum += term;
    });
    return sum / rising_factorial(theta, m * (k - 1));
}

Rat gaussian_moment_k1(const Rat& theta, int m) {
    if (m < 0) throw std::invalid_argument("gaussian_moment_k1: m must be >= 0");
    if (m % 2 == 1) return 0;
    const int h = m / 2;
    Rat r = Rat(factorial(m), ipow(Int(2), h) * factorial(h));
    Rat v = theta / 6;
    for (int i = 0; i < h; ++i) r *= v;
    return r;
}

Rat poissonized_cumulant(int k, const Rat& theta, int m) {
    if (k < 2) throw std::invalid_argument("poissonized_cumulant: requires k >= 2");
    if (m < 1) throw std::invalid_argument("poissonized_cumulant: m must be >= 1");
    if (m % 2 == 1) return 0;
    return 2 * theta / (Rat(k - 1) * m * (m + 1) * (m + 2));
}

std::vector<Rat> poissonized_moments(int k, const Rat& theta, int order) {
    RationalSeries cgf(order);  // sum_m kappa_m z^m / m!
    for (int m = 2; m <= order; m += 2)
        cgf.coeff[static_cast<std::size_t>(m)] = poissonized_cumulant(k, theta, m) / Rat(factorial(m));
    const RationalSeries mgf = series_exp(cgf);
    std::vector<Rat> moments(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m)
        moments[static_cast<std::size_t>(m)] = mgf.coeff[static_cast<std::size_t>(m)] * Rat(factorial(m));
    return moments;
}

CrossMomentTargets cross_moment_targets() {
    CrossMomentTargets t;
    t.product_of_second_moments = Rat(1, 144);
    t.joint_fourth = Rat(7, 864);
    return t;
}

}  // namespace permspec
