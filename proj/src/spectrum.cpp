#include "permspec/spectrum.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "permspec/numerics.hpp"

namespace permspec {

void SpectrumCycleType::add(const Int& length, const Int& multiplicity) {
    if (multiplicity == 0) return;
    counts[length] += multiplicity;
}

Int SpectrumCycleType::computed_total() const {
    Int t = 0;
    for (const auto& [len, cnt] : counts) t += len * cnt;
    return t;
}

namespace {

std::vector<std::int64_t> divisors_of(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius_of(std::int64_t n) {
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

NecklaceCounts necklace_counts(std::int64_t length, std::int64_t ones) {
    if (length < 1) throw std::invalid_argument("necklace_counts: length must be positive");
    if (ones < 0 || ones > length)
        throw std::invalid_argument("necklace_counts: ones out of range");
    NecklaceCounts out;
    const std::int64_t g = ones == 0 ? length : gcd_i64(length, ones);
    Int mu_sum = 0, phi_sum = 0;
    for (std::int64_t d : divisors_of(g)) {
        const Int c = binomial(length / d, ones / d);
        mu_sum += mobius_of(d) * c;
        phi_sum += euler_phi(d) * c;
    }
    out.aperiodic = mu_sum / length;
    out.total = phi_sum / length;
    for (std::int64_t d : divisors_of(length)) {
        // necklaces of period d: each is a repeated aperiodic necklace of
        // length d carrying ones*d/length ones
        if ((ones * d) % length != 0) continue;
        const std::int64_t ones_d = ones * d / length;
        Int l_sum = 0;
        const std::int64_t gd = ones_d == 0 ? d : gcd_i64(d, ones_d);
        for (std::int64_t e : divisors_of(gd)) l_sum += mobius_of(e) * binomial(d / e, ones_d / e);
        const Int aper = l_sum / d;
        if (aper != 0) out.by_period[d] = aper;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Double-partition profiles

namespace {

// Per top-level block: non-increasing sub-block sizes.  `weight` counts the
// concrete nested set partitions of [k] realizing the shape.
struct TupleProfile {
    std::vector<std::vector<std::int64_t>> blocks;
    Int weight;
};

void enum_set_partitions(int k, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            emit(blocks);
            return;
        }
        for (auto& b : blocks) {
            b.push_back(i);
            rec(i + 1);
            b.pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

std::vector<TupleProfile> build_tuple_profiles(int k) {
    std::map<std::vector<std::vector<std::int64_t>>, Int> acc;
    enum_set_partitions(k, [&](const std::vector<std::vector<int>>& top) {
        // nested set partitions, one per top block
        std::vector<std::vector<std::int64_t>> shape(top.size());
        std::function<void(std::size_t)> rec = [&](std::size_t r) {
            if (r == top.size()) {
                auto key = shape;
                for (auto& s : key) std::sort(s.begin(), s.end(), std::greater<>());
                std::sort(key.begin(), key.end(), [](const auto& a, const auto& b) {
                    std::int64_t sa = 0, sb = 0;
                    for (auto v : a) sa += v;
                    for (auto v : b) sb += v;
                    if (sa != sb) return sa > sb;
                    return a > b;
                });
                acc[key] += 1;
                return;
            }
            enum_set_partitions(static_cast<int>(top[r].size()),
                                [&](const std::vector<std::vector<int>>& nested) {
                                    shape[r].clear();
                                    for (const auto& nb : nested)
                                        shape[r].push_back(static_cast<std::int64_t>(nb.size()));
                                    rec(r + 1);
                                });
            shape[r].clear();
        };
        rec(0);
    });
    std::vector<TupleProfile> out;
    for (auto& [key, w] : acc) out.push_back({key, w});
    return out;
}

const std::vector<TupleProfile>& tuple_profiles(int k) {
    static std::mutex mu;
    static std::map<int, std::vector<TupleProfile>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_tuple_profiles(k)).first;
    return it->second;
}

struct SubsetRow {
    std::int64_t part = 0;
    std::vector<std::int64_t> sub;  // non-increasing subpartition of `part`
    Int sub_sym = 1;                // prod over equal sub-part multiplicities factorial

    bool operator==(const SubsetRow& o) const { return part == o.part && sub == o.sub; }
    bool operator<(const SubsetRow& o) const {
        if (part != o.part) return part > o.part;
        return sub > o.sub;
    }
};

using SubsetProfile = std::vector<SubsetRow>;

void enum_partitions_desc(std::int64_t n, std::int64_t max_part,
                          std::vector<std::int64_t>& cur,
                          const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    if (n == 0) {
        emit(cur);
        return;
    }
    for (std::int64_t p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        enum_partitions_desc(n - p, p, cur, emit);
        cur.pop_back();
    }
}

Int subpart_symmetry(const std::vector<std::int64_t>& sub) {
    Int f = 1;
    std::int64_t run = 1;
    for (std::size_t i = 1; i <= sub.size(); ++i) {
        if (i < sub.size() && sub[i] == sub[i - 1]) {
            ++run;
        } else {
            f *= factorial(run);
            run = 1;
        }
    }
    return f;
}

std::vector<SubsetProfile> build_subset_profiles(int k) {
    std::set<SubsetProfile> dedup;
    std::vector<std::int64_t> parts;
    enum_partitions_desc(k, k, parts, [&](const std::vector<std::int64_t>& ps) {
        // choose a subpartition per part, independently
        std::vector<std::vector<std::vector<std::int64_t>>> options(ps.size());
        for (std::size_t r = 0; r < ps.size(); ++r) {
            std::vector<std::int64_t> cur;
            enum_partitions_desc(ps[r], ps[r], cur, [&](const std::vector<std::int64_t>& sp) {
                options[r].push_back(sp);
            });
        }
        SubsetProfile rows(ps.size());
        std::function<void(std::size_t)> rec = [&](std::size_t r) {
            if (r == ps.size()) {
                SubsetProfile canon = rows;
                std::sort(canon.begin(), canon.end());
                dedup.insert(canon);
                return;
            }
            for (const auto& sp : options[r]) {
                rows[r] = SubsetRow{ps[r], sp, subpart_symmetry(sp)};
                rec(r + 1);
            }
        };
        rec(0);
    });
    return {dedup.begin(), dedup.end()};
}

const std::vector<SubsetProfile>& subset_profiles(int k) {
    static std::mutex mu;
    static std::map<int, std::vector<SubsetProfile>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_subset_profiles(k)).first;
    return it->second;
}

void check_k_range(const CycleType& ct, int k, int k_bound) {
    if (k < 1 || k > ct.n)
        throw std::domain_error("induced cycle type: k out of range 1..n");
    if (k > k_bound)
        throw std::domain_error("induced cycle type: k exceeds bound " + std::to_string(k_bound));
}

}  // namespace

SpectrumCycleType induced_tuple_cycle_type(const CycleType& ct, int k, int k_bound) {
    check_k_range(ct, k, k_bound);
    std::vector<std::pair<std::int64_t, std::int64_t>> lengths(ct.counts.begin(), ct.counts.end());
    const std::size_t d = lengths.size();
    SpectrumCycleType out;
    out.total = falling_factorial(Int(ct.n), k);

    std::vector<std::size_t> chosen;
    std::vector<bool> used(d, false);
    for (const auto& profile : tuple_profiles(k)) {
        const std::size_t m = profile.blocks.size();
        std::function<void(std::size_t)> assign = [&](std::size_t r) {
            if (r == m) {
                Int lcm_all = 1;
                Int count = profile.weight;
                for (std::size_t t = 0; t < m; ++t) {
                    const auto [len, cnt] = lengths[chosen[t]];
                    const auto& subs = profile.blocks[t];
                    count *= falling_factorial(Int(cnt), static_cast<std::int64_t>(subs.size()));
                    for (std::int64_t s : subs) count *= falling_factorial(Int(len), s);
                    lcm_all = lcm(lcm_all, Int(len));
                }
                if (count != 0) {
                    if (count % lcm_all != 0)
                        throw std::logic_error("induced_tuple_cycle_type: class not cycle-divisible");
                    out.add(lcm_all, count / lcm_all);
                }
                return;
            }
            const std::size_t p_r = profile.blocks[r].size();
            for (std::size_t i = 0; i < d; ++i) {
                if (used[i]) continue;
                if (lengths[i].second < static_cast<std::int64_t>(p_r)) continue;
                used[i] = true;
                chosen.push_back(i);
                assign(r + 1);
                chosen.pop_back();
                used[i] = false;
            }
        };
        assign(0);
    }
    return out;
}

SpectrumCycleType induced_subset_cycle_type(const CycleType& ct, int k, int k_bound) {
    check_k_range(ct, k, k_bound);
    std::vector<std::pair<std::int64_t, std::int64_t>> lengths(ct.counts.begin(), ct.counts.end());
    const std::size_t d = lengths.size();
    SpectrumCycleType out;
    out.total = binomial(ct.n, k);

    for (const auto& profile : subset_profiles(k)) {
        const std::size_t m = profile.size();
        std::vector<std::size_t> chosen(m);
        std::vector<bool> used(d, false);

        // expand period choices for all sub-parts of all rows
        std::function<void(std::size_t, std::size_t, Int, Int)> expand =
            [&](std::size_t r, std::size_t s, Int lcm_d, Int mult) {
                if (r == m) {
                    if (mult % lcm_d != 0)
                        throw std::logic_error("induced_subset_cycle_type: class not cycle-divisible");
                    out.add(lcm_d, mult / lcm_d);
                    return;
                }
                const auto [len, cnt] = lengths[chosen[r]];
                const auto& row = profile[r];
                if (s == 0) {
                    Int base = falling_factorial(Int(cnt),
                                                 static_cast<std::int64_t>(row.sub.size()));
                    if (base == 0) return;
                    if (base % row.sub_sym != 0)
                        throw std::logic_error("induced_subset_cycle_type: symmetry division");
                    mult *= base / row.sub_sym;
                }
                if (s == row.sub.size()) {
                    expand(r + 1, 0, lcm_d, mult);
                    return;
                }
                const NecklaceCounts nk = necklace_counts(len, row.sub[s]);
                for (const auto& [period, n_d] : nk.by_period) {
                    expand(r, s + 1, lcm(lcm_d, Int(period)), mult * period * n_d);
                }
            };

        // injective assignment of distinct lengths to rows; identical rows
        // receive lengths in increasing order so each orbit class is counted
        // exactly once
        std::function<void(std::size_t)> assign = [&](std::size_t r) {
            if (r == m) {
                expand(0, 0, Int(1), Int(1));
                return;
            }
            std::size_t start = 0;
            if (r > 0 && profile[r] == profile[r - 1]) start = chosen[r - 1] + 1;
            for (std::size_t i = start; i < d; ++i) {
                if (used[i]) continue;
                if (lengths[i].second < static_cast<std::int64_t>(profile[r].sub.size())) continue;
                used[i] = true;
                chosen[r] = i;
                assign(r + 1);
                used[i] = false;
            }
        };
        assign(0);
    }

    // symmetry division inside expand() is per-row; the remaining
    // aggregate must reproduce C(n,k) elements, checked by callers/tests
    return out;
}

SpectrumCycleType brute_force_induced(const std::vector<std::int64_t>& one_line, int k,
                                      ActionKind kind) {
    const std::int64_t n = static_cast<std::int64_t>(one_line.size());
    CycleType ct = cycle_type_of(one_line);  // validates bijection
    (void)ct;
    if (k < 1 || k > n) throw std::domain_error("brute_force_induced: k out of range");
    const Int degree =
        kind == ActionKind::Tuple ? falling_factorial(Int(n), k) : binomial(n, k);
    if (degree > 1000000)
        throw std::domain_error("brute_force_induced: degree exceeds 10^6");
    const std::size_t m = static_cast<std::size_t>(degree);

    std::vector<std::vector<std::int32_t>> elems;
    elems.reserve(m);
    std::vector<std::int32_t> cur;
    const bool subset = kind == ActionKind::Subset;
    std::function<void()> gen = [&]() {
        if (cur.size() == static_cast<std::size_t>(k)) {
            elems.push_back(cur);
            return;
        }
        for (std::int32_t v = subset && !cur.empty() ? cur.back() + 1 : 1; v <= n; ++v) {
            if (!subset) {
                bool dup = false;
                for (std::int32_t u : cur) dup = dup || (u == v);
                if (dup) continue;
            }
            cur.push_back(v);
            gen();
            cur.pop_back();
        }
    };
    gen();
    if (elems.size() != m) throw std::logic_error("brute_force_induced: enumeration mismatch");

    auto encode = [&](const std::vector<std::int32_t>& e) {
        std::uint64_t code = 0;
        for (std::int32_t v : e) code = code * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(v);
        return code;
    };
    std::unordered_map<std::uint64_t, std::int32_t> index;
    index.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) index.emplace(encode(elems[i]), static_cast<std::int32_t>(i));

    std::vector<std::int32_t> image(m);
    std::vector<std::int32_t> tmp;
    for (std::size_t i = 0; i < m; ++i) {
        tmp = elems[i];
        for (auto& v : tmp) v = static_cast<std::int32_t>(one_line[static_cast<std::size_t>(v - 1)]);
        if (subset) std::sort(tmp.begin(), tmp.end());
        image[i] = index.at(encode(tmp));
    }

    SpectrumCycleType out;
    out.total = degree;
    std::vector<bool> visited(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (visited[i]) continue;
        std::int64_t len = 0;
        std::size_t j = i;
        while (!visited[j]) {
            visited[j] = true;
            j = static_cast<std::size_t>(image[j]);
            ++len;
        }
        out.add(Int(len), 1);
    }
    return out;
}

Int count_in_interval(const SpectrumCycleType& spec, const Interval& I) {
    if (!(I.alpha.value() > 0))
        throw std::domain_error("count_in_interval: endpoints must lie strictly inside (0,1)");
    Int total = 0;
    for (const auto& [len, cnt] : spec.counts)
        total += cnt * (floor_scaled(I.beta, len) - floor_scaled(I.alpha, len));
    return total;
}

// ---------------------------------------------------------------------------
// Angle-sum multisets

void AngleMultiset::add(const Int& numerator, const Int& multiplicity) {
    if (multiplicity == 0) return;
    Int r = numerator % denom;
    if (r < 0) r += denom;
    counts[r] += multiplicity;
}

Int AngleMultiset::total() const {
    Int t = 0;
    for (const auto& [num, cnt] : counts) t += cnt;
    return t;
}

bool AngleMultiset::operator==(const AngleMultiset& o) const {
    if (denom == o.denom) return counts == o.counts;
    // compare over the common denominator
    const Int common = lcm(denom, o.denom);
    auto lift = [&](const AngleMultiset& a) {
        std::map<Int, Int> out;
        const Int f = common / a.denom;
        for (const auto& [num, cnt] : a.counts) out[num * f] += cnt;
        return out;
    };
    return lift(*this) == lift(o);
}

AngleMultiset AngleMultiset::translated(const Int& shift_num) const {
    AngleMultiset out;
    out.denom = denom;
    for (const auto& [num, cnt] : counts) out.add(num + shift_num, cnt);
    return out;
}

void AngleMultiset::merge(const AngleMultiset& o, const Int& copies) {
    if (denom != o.denom) {
        const Int common = lcm(denom, o.denom);
        if (common != denom) {
            const Int f = common / denom;
            std::map<Int, Int> lifted;
            for (const auto& [num, cnt] : counts) lifted[num * f] = cnt;
            counts = std::move(lifted);
            denom = common;
        }
    }
    const Int f = denom / o.denom;
    for (const auto& [num, cnt] : o.counts) add(num * f, cnt * copies);
}

Int count_in_interval(const AngleMultiset& angles, const Interval& I) {
    if (!(I.alpha.value() > 0))
        throw std::domain_error("count_in_interval: endpoints must lie strictly inside (0,1)");
    Int total = 0;
    const Rat a = I.alpha.value();
    const Rat b = I.beta.value();
    for (const auto& [num, cnt] : angles.counts) {
        const Rat x(num, angles.denom);
        if (a < x && x < b) total += cnt;
    }
    return total;
}

ByCycleAngles by_cycle_angles(const CycleType& ct) {
    ct.validate();
    ByCycleAngles out;
    for (const auto& [len, cnt] : ct.counts) {
        (void)cnt;
        out.denom = lcm(out.denom, Int(len));
    }
    out.nums.reserve(static_cast<std::size_t>(ct.n));
    for (std::int64_t len : ct.parts_desc()) {
        const Int step = out.denom / len;
        for (std::int64_t r = 1; r < len; ++r) out.nums.push_back(step * r);
        out.nums.push_back(0);  // cycle end: angle 1 == 0 mod 1
    }
    return out;
}

namespace {

AngleMultiset sums_over_subsets(const ByCycleAngles& b, const std::vector<std::int64_t>& positions,
                                int k, const Int& multiplicity) {
    AngleMultiset out;
    out.denom = b.denom;
    const std::size_t m = positions.size();
    if (k == 0) {
        out.add(0, multiplicity);
        return out;
    }
    if (static_cast<std::size_t>(k) > m) return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    std::vector<Int> partial(static_cast<std::size_t>(k) + 1);
    partial[0] = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        if (depth == static_cast<std::size_t>(k)) {
            out.add(partial[depth], multiplicity);
            return;
        }
        for (std::size_t i = start; i + (static_cast<std::size_t>(k) - depth) <= m; ++i) {
            partial[depth + 1] =
                partial[depth] + b.nums[static_cast<std::size_t>(positions[i]) - 1];
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<std::int64_t> first_positions(std::int64_t m) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    return p;
}

}  // namespace

AngleMultiset subset_sum_multiset(const ByCycleAngles& b, std::int64_t m, int k) {
    if (m < 0 || m > static_cast<std::int64_t>(b.nums.size()))
        throw std::invalid_argument("subset_sum_multiset: prefix out of range");
    return sums_over_subsets(b, first_positions(m), k, 1);
}

AngleMultiset tuple_sum_multiset(const ByCycleAngles& b, std::int64_t m, int k) {
    if (m < 0 || m > static_cast<std::int64_t>(b.nums.size()))
        throw std::invalid_argument("tuple_sum_multiset: prefix out of range");
    // ordered tuples of distinct entries: k! copies of each subset sum
    return sums_over_subsets(b, first_positions(m), k, factorial(k));
}

AngleMultiset tuple_sum_multiset_avoiding(const ByCycleAngles& b, std::int64_t avoid, int k) {
    std::vector<std::int64_t> positions;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(b.nums.size()); ++i)
        if (i != avoid) positions.push_back(i);
    return sums_over_subsets(b, positions, k, factorial(k));
}

AngleMultiset duplicate_sum_multiset(const ByCycleAngles& b, int k) {
    const std::int64_t n = static_cast<std::int64_t>(b.nums.size());
    if (k < 2) throw std::invalid_argument("duplicate_sum_multiset: k must be >= 2");
    double size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<double>(n);
    if (size > 4e6) throw std::domain_error("duplicate_sum_multiset: n^k too large");
    AngleMultiset out;
    out.denom = b.denom;
    std::vector<std::int64_t> tup(static_cast<std::size_t>(k));
    std::function<void(std::size_t, Int)> rec = [&](std::size_t depth, Int sum) {
        if (depth == static_cast<std::size_t>(k)) {
            // exactly one value appears exactly twice, all others once
            std::vector<std::int64_t> sorted(tup);
            std::sort(sorted.begin(), sorted.end());
            int pairs = 0;
            bool higher = false;
            for (std::size_t i = 0; i + 1 < sorted.size();) {
                std::size_t j = i;
                while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
                const std::size_t run = j - i + 1;
                if (run == 2) ++pairs;
                if (run > 2) higher = true;
                i = j + 1;
            }
            if (pairs == 1 && !higher) out.add(sum, 1);
            return;
        }
        for (std::int64_t v = 1; v <= n; ++v) {
            tup[depth] = v;
            rec(depth + 1, sum + b.nums[static_cast<std::size_t>(v) - 1]);
        }
    };
    rec(0, Int(0));
    return out;
}

AngleMultiset hook_irrep_angle_index(const CycleType& ct, int k, const Int& enum_bound) {
    ct.validate();
    if (k < 0 || k > ct.n - 1)
        throw std::domain_error("hook_irrep_angle_index: k out of range 0..n-1");
    const Int size = binomial(ct.n - 1, k);
    if (size > enum_bound)
        throw std::domain_error("hook_irrep_angle_index: C(n-1,k) exceeds enumeration bound");
    const ByCycleAngles b = by_cycle_angles(ct);
    return sums_over_subsets(b, first_positions(ct.n - 1), k, 1);
}

namespace {

// Eigenangle count of the hook irrep inside I for k = 2 without enumeration.
// Sums of two distinct entries of b decompose by whether the entries share a
// base cycle instance; each class contributes lattice angles counted by
// exact floors.  The removed index n pairs as b(j) + 0, subtracted at the
// end (0 itself never lies in I since alpha > 0).
Int hook_count_k2(const CycleType& ct, const Interval& I) {
    auto count_angles = [&](const Int& den) {
        return floor_scaled(I.beta, den) - floor_scaled(I.alpha, den);
    };
    Int total = 0;
    // pairs within one cycle instance of length L: residue t appears
    // (L-1)/2 times for odd L; (L-2)/2 (t even) or L/2 (t odd) for even L
    for (const auto& [len, cnt] : ct.counts) {
        const Int n_all = count_angles(Int(len));
        if (len % 2 == 1) {
            total += Int(cnt) * ((len - 1) / 2) * n_all;
        } else {
            const Int n_even = count_angles(Int(len / 2));
            const Int n_odd = n_all - n_even;
            total += Int(cnt) * (Int((len - 2) / 2) * n_even + Int(len / 2) * n_odd);
        }
    }
    // pairs across two cycle instances: sums cover multiples of
    // gcd/(L1 L2), i.e. each angle of the lcm lattice, gcd times
    for (auto it1 = ct.counts.begin(); it1 != ct.counts.end(); ++it1) {
        for (auto it2 = it1; it2 != ct.counts.end(); ++it2) {
            const std::int64_t l1 = it1->first, l2 = it2->first;
            const Int pairs = it1 == it2 ? Int(it1->second) * (it1->second - 1) / 2
                                         : Int(it1->second) * it2->second;
            if (pairs == 0) continue;
            const std::int64_t g = gcd_i64(l1, l2);
            const Int m = Int(l1) / g * l2;
            total += pairs * g * count_angles(m);
        }
    }
    // remove pairs that used the dropped index (angle 0)
    for (const auto& [len, cnt] : ct.counts) total -= Int(cnt) * count_angles(Int(len));
    return total;
}

}  // namespace

Int hook_irrep_interval_count(const CycleType& ct, int k, const Interval& I,
                              const Int& enum_bound) {
    if (!(I.alpha.value() > 0))
        throw std::domain_error("hook_irrep_interval_count: endpoints must lie inside (0,1)");
    if (k < 1 || k > ct.n - 1)
        throw std::domain_error("hook_irrep_interval_count: k out of range");
    if (k == 1) {
        Int total = 0;
        for (const auto& [len, cnt] : ct.counts)
            total += Int(cnt) * (floor_scaled(I.beta, Int(len)) - floor_scaled(I.alpha, Int(len)));
        return total;
    }
    if (k == 2) return hook_count_k2(ct, I);
    return count_in_interval(hook_irrep_angle_index(ct, k, enum_bound), I);
}

// ---------------------------------------------------------------------------
// Normalized statistics

Rat y_statistic_exact(const CycleType& ct, int k, const Interval& I) {
    if (k < 1) throw std::invalid_argument("y_statistic: k must be >= 1");
    Rat sum = 0;
    for (const auto& [len, cnt] : ct.counts) {
        Rat term = frac_diff(I.alpha, I.beta, Int(len));
        term *= ipow(Int(len), k - 1);
        term *= cnt;
        sum += term;
    }
    return sum / Rat(ipow(Int(ct.n), k - 1));
}

double y_statistic(const CycleType& ct, int k, const Interval& I) {
    return static_cast<double>(y_statistic_exact(ct, k, I));
}

Int rep_interval_count(const CycleType& ct, int k, const Interval& I, RepMode mode,
                       const Int& irrep_enum_bound) {
    switch (mode) {
        case RepMode::Tuple:
            return count_in_interval(induced_tuple_cycle_type(ct, k), I);
        case RepMode::Set:
            return count_in_interval(induced_subset_cycle_type(ct, k), I);
        case RepMode::Irrep:
            return hook_irrep_interval_count(ct, k, I, irrep_enum_bound);
    }
    throw std::logic_error("rep_interval_count: bad mode");
}

double y_rep_statistic(const CycleType& ct, int k, const Interval& I, RepMode mode,
                       double centering, const Int& irrep_enum_bound) {
    const Int x = rep_interval_count(ct, k, I, mode, irrep_enum_bound);
    double scale = 1.0;
    for (int i = 1; i < k; ++i) scale *= static_cast<double>(ct.n);
    double y = (static_cast<double>(x) - centering) / scale;
    if (mode != RepMode::Tuple) y *= static_cast<double>(factorial(k));
    return y;
}

// ---------------------------------------------------------------------------
// Exact expected counts (Watterson summation)

namespace {

Rat frac_diff_rat(const Interval& I, const Int& j) { return frac_diff(I.alpha, I.beta, j); }

// F(l) = prod_{i=0}^{l-1} (n-i)/(theta+n-i-1), precomputed for l = 0..n
std::vector<Rat> watterson_ratio_table(std::int64_t n, const Rat& theta) {
    std::vector<Rat> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (std::int64_t l = 1; l <= n; ++l)
        f[static_cast<std::size_t>(l)] =
            f[static_cast<std::size_t>(l - 1)] * Rat(n - l + 1) / (theta + n - l);
    return f;
}

Rat expected_tuple_count(std::int64_t n, int k, const Rat& theta, const Interval& I) {
    const auto f = watterson_ratio_table(n, theta);
    Rat sum = Rat(falling_factorial(Int(n), k)) * I.length();
    std::vector<std::int64_t> chosen;
    for (const auto& profile : tuple_profiles(k)) {
        const std::size_t m = profile.blocks.size();
        std::function<void(std::size_t)> assign = [&](std::size_t r) {
            if (r == m) {
                Int lcm_all = 1;
                Rat term = profile.weight;
                std::int64_t l = 0;
                for (std::size_t t = 0; t < m; ++t) {
                    const std::int64_t len = chosen[t];
                    const auto& subs = profile.blocks[t];
                    const std::int64_t p_r = static_cast<std::int64_t>(subs.size());
                    Rat th = 1;
                    for (std::int64_t i = 0; i < p_r; ++i) th *= theta / len;
                    term *= th;
                    for (std::int64_t s : subs) term *= Rat(falling_factorial(Int(len), s));
                    l += len * p_r;
                    lcm_all = lcm(lcm_all, Int(len));
                }
                if (l <= n && term != 0) {
                    term *= f[static_cast<std::size_t>(l)];
                    sum += term * frac_diff_rat(I, lcm_all) / Rat(lcm_all);
                }
                return;
            }
            for (std::int64_t len = 1; len <= n; ++len) {
                bool dup = false;
                for (std::int64_t c : chosen) dup = dup || (c == len);
                if (dup) continue;
                chosen.push_back(len);
                assign(r + 1);
                chosen.pop_back();
            }
        };
        assign(0);
    }
    return sum;
}

Rat expected_subset_count(std::int64_t n, int k, const Rat& theta, const Interval& I) {
    const auto f = watterson_ratio_table(n, theta);
    Rat sum = Rat(binomial(n, k)) * I.length();
    for (const auto& profile : subset_profiles(k)) {
        const std::size_t m = profile.size();
        std::vector<std::int64_t> chosen(m);

        std::function<void(std::size_t, std::size_t, Int, Rat)> expand =
            [&](std::size_t r, std::size_t s, Int lcm_d, Rat mult) {
                if (r == m) {
                    sum += mult * frac_diff_rat(I, lcm_d) / Rat(lcm_d);
                    return;
                }
                const std::int64_t len = chosen[r];
                const auto& row = profile[r];
                if (s == 0) {
                    const std::int64_t p_r = static_cast<std::int64_t>(row.sub.size());
                    Rat th = 1;
                    for (std::int64_t i = 0; i < p_r; ++i) th *= theta / len;
                    mult *= th / Rat(row.sub_sym);
                }
                if (s == row.sub.size()) {
                    expand(r + 1, 0, lcm_d, mult);
                    return;
                }
                const NecklaceCounts nk = necklace_counts(len, row.sub[s]);
                for (const auto& [period, n_d] : nk.by_period)
                    expand(r, s + 1, lcm(lcm_d, Int(period)), mult * Rat(Int(period) * n_d));
            };

        std::function<void(std::size_t, std::int64_t)> assign = [&](std::size_t r,
                                                                    std::int64_t lower) {
            if (r == m) {
                std::int64_t l = 0;
                for (std::size_t t = 0; t < m; ++t)
                    l += chosen[t] * static_cast<std::int64_t>(profile[t].sub.size());
                if (l > n) return;
                expand(0, 0, Int(1), Rat(f[static_cast<std::size_t>(l)]));
                return;
            }
            const std::int64_t start = (r > 0 && profile[r] == profile[r - 1]) ? lower + 1 : 1;
            for (std::int64_t len = start; len <= n; ++len) {
                bool dup = false;
                for (std::size_t t = 0; t < r; ++t) dup = dup || (chosen[t] == len);
                if (dup) continue;
                chosen[r] = len;
                assign(r + 1, len);
            }
        };
        assign(0, 0);
    }
    return sum;
}

Rat expected_irrep_count(std::int64_t n, int k, const Rat& theta, const Interval& I) {
    if (k > 2)
        throw std::domain_error("expected_rep_interval_count: irrep centering supports k <= 2");
    const auto f = watterson_ratio_table(n, theta);
    auto n_angles = [&](const Int& den) {
        return Rat(floor_scaled(I.beta, den) - floor_scaled(I.alpha, den));
    };
    if (k == 1) {
        Rat sum = 0;
        for (std::int64_t j = 1; j <= n; ++j)
            sum += (theta / j) * f[static_cast<std::size_t>(j)] * n_angles(Int(j));
        return sum;
    }
    Rat sum = 0;
    // within one cycle instance
    for (std::int64_t len = 1; len <= n; ++len) {
        const Rat e_c = (theta / len) * f[static_cast<std::size_t>(len)];
        Rat per_cycle;
        const Rat all = n_angles(Int(len));
        if (len % 2 == 1) {
            per_cycle = Rat((len - 1) / 2) * all;
        } else {
            const Rat even = n_angles(Int(len / 2));
            per_cycle = Rat((len - 2) / 2) * even + Rat(len / 2) * (all - even);
        }
        sum += e_c * per_cycle;
    }
    // across two cycle instances
    for (std::int64_t l1 = 1; l1 <= n; ++l1) {
        for (std::int64_t l2 = l1; l2 <= n; ++l2) {
            const std::int64_t l = l1 == l2 ? 2 * l1 : l1 + l2;
            if (l > n) break;
            Rat pairs;
            if (l1 == l2) {
                pairs = (theta / l1) * (theta / l1) * f[static_cast<std::size_t>(l)] / 2;
            } else {
                pairs = (theta / l1) * (theta / l2) * f[static_cast<std::size_t>(l)];
            }
            const std::int64_t g = gcd_i64(l1, l2);
            sum += pairs * g * n_angles(Int(l1) / g * l2);
        }
    }
    // dropped index
    for (std::int64_t j = 1; j <= n; ++j)
        sum -= (theta / j) * f[static_cast<std::size_t>(j)] * n_angles(Int(j));
    return sum;
}

}  // namespace

Rat expected_rep_interval_count(std::int64_t n, int k, const Rat& theta, const Interval& I,
                                RepMode mode) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("expected_rep_interval_count: bad n, k");
    double cost = 1;
    for (int i = 0; i < k; ++i) cost *= static_cast<double>(n);
    if (n > 300 || (mode != RepMode::Irrep && cost > 4e6))
        throw std::domain_error(
            "expected_rep_interval_count: exact centering supported for n <= 300 with n^k <= 4e6");
    switch (mode) {
        case RepMode::Tuple:
            return expected_tuple_count(n, k, theta, I);
        case RepMode::Set:
            return expected_subset_count(n, k, theta, I);
        case RepMode::Irrep:
            return expected_irrep_count(n, k, theta, I);
    }
    throw std::logic_error("expected_rep_interval_count: bad mode");
}

// ---------------------------------------------------------------------------
// Trapezoidal statistics

double trapezoid_error(const std::function<double(double)>& f, std::int64_t j, double integral) {
    if (j < 1) throw std::invalid_argument("trapezoid_error: j must be positive");
    double s = 0.5 * (f(0.0) + f(1.0));
    for (std::int64_t i = 1; i < j; ++i)
        s += f(static_cast<double>(i) / static_cast<double>(j));
    return s / static_cast<double>(j) - integral;
}

double trapezoid_error(const std::function<double(double)>& f, std::int64_t j) {
    return trapezoid_error(f, j, adaptive_simpson(f, 0.0, 1.0, 1e-12));
}

double y_statistic_f(const CycleType& ct, int k, const std::function<double(double)>& f,
                     double integral) {
    KahanSum sum;
    for (const auto& [len, cnt] : ct.counts) {
        double jk = 1.0;
        for (int i = 0; i < k; ++i) jk *= static_cast<double>(len);
        sum.add(static_cast<double>(cnt) * jk * trapezoid_error(f, len, integral));
    }
    double scale = 1.0;
    for (int i = 1; i < k; ++i) scale *= static_cast<double>(ct.n);
    return sum.value() / scale;
}

double y_statistic_f(const CycleType& ct, int k, const std::function<double(double)>& f) {
    return y_statistic_f(ct, k, f, adaptive_simpson(f, 0.0, 1.0, 1e-12));
}

}  // namespace permspec
