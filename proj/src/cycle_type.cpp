#include "permspec/cycle_type.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permspec {

CycleType::CycleType(std::int64_t n_, std::map<std::int64_t, std::int64_t> counts_)
    : n(n_), counts(std::move(counts_)) {
    validate();
}

void CycleType::validate() const {
    if (n < 1) throw std::invalid_argument("CycleType: n must be positive");
    std::int64_t total = 0;
    for (const auto& [len, cnt] : counts) {
        if (len < 1 || len > n) throw std::invalid_argument("CycleType: cycle length out of range");
        if (cnt < 1) throw std::invalid_argument("CycleType: counts must be positive");
        total += len * cnt;
    }
    if (total != n) throw std::invalid_argument("CycleType: sum of j*C_j != n");
}

std::int64_t CycleType::total_cycles() const {
    std::int64_t k = 0;
    for (const auto& [len, cnt] : counts) {
        (void)len;
        k += cnt;
    }
    return k;
}

std::vector<std::int64_t> CycleType::parts_desc() const {
    std::vector<std::int64_t> parts;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        for (std::int64_t c = 0; c < it->second; ++c) parts.push_back(it->first);
    return parts;
}

CycleType cycle_type_of(const std::vector<std::int64_t>& one_line) {
    const std::int64_t n = static_cast<std::int64_t>(one_line.size());
    if (n == 0) throw std::invalid_argument("cycle_type_of: empty permutation");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int64_t v : one_line) {
        if (v < 1 || v > n) throw std::invalid_argument("cycle_type_of: value out of range");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("cycle_type_of: not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    CycleType ct;
    ct.n = n;
    for (std::int64_t i = 0; i < n; ++i) {
        if (visited[static_cast<std::size_t>(i)]) continue;
        std::int64_t len = 0;
        std::int64_t j = i;
        while (!visited[static_cast<std::size_t>(j)]) {
            visited[static_cast<std::size_t>(j)] = true;
            j = one_line[static_cast<std::size_t>(j)] - 1;
            ++len;
        }
        ++ct.counts[len];
    }
    ct.validate();
    return ct;
}

Int conjugacy_class_size(const CycleType& ct) {
    Int denom = 1;
    for (const auto& [len, cnt] : ct.counts) denom *= ipow(Int(len), cnt) * factorial(cnt);
    return factorial(ct.n) / denom;
}

namespace {

void partitions_rec(std::int64_t remaining, std::int64_t max_part,
                    std::map<std::int64_t, std::int64_t>& current, std::int64_t n,
                    std::vector<std::pair<CycleType, Int>>& out) {
    if (remaining == 0) {
        CycleType ct;
        ct.n = n;
        ct.counts = current;
        out.emplace_back(ct, conjugacy_class_size(ct));
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++current[part];
        partitions_rec(remaining - part, part, current, n, out);
        if (--current[part] == 0) current.erase(part);
    }
}

}  // namespace

std::vector<std::pair<CycleType, Int>> enumerate_cycle_types(std::int64_t n, std::int64_t bound) {
    if (n < 1) throw std::invalid_argument("enumerate_cycle_types: n must be positive");
    if (n > bound)
        throw std::domain_error("enumerate_cycle_types: n exceeds bound " + std::to_string(bound));
    std::vector<std::pair<CycleType, Int>> out;
    std::map<std::int64_t, std::int64_t> current;
    partitions_rec(n, n, current, n, out);
    return out;
}

}  // namespace permspec
