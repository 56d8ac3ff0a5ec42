#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace permspec::detail {

// Set partitions of {0, ..., k-1}, emitted as lists of blocks.
inline void enum_set_partitions(int k,
                                const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
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

// Integer partitions of n with parts <= max_part, in non-increasing order.
inline void enum_partitions_desc(std::int64_t n, std::int64_t max_part,
                                 std::vector<std::int64_t>& scratch,
                                 const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    if (n == 0) {
        emit(scratch);
        return;
    }
    for (std::int64_t p = std::min(n, max_part); p >= 1; --p) {
        scratch.push_back(p);
        enum_partitions_desc(n - p, p, scratch, emit);
        scratch.pop_back();
    }
}

}  // namespace permspec::detail
