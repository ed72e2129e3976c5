#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace fim {

using ItemId = std::uint32_t;
using Tid = std::uint32_t;

// Canonical form for both: sorted ascending, duplicate-free.
using Itemset = std::vector<ItemId>;
using TidList = std::vector<Tid>;

inline void canonicalize(Itemset& items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
}

inline bool is_canonical(const Itemset& items) {
    return std::adjacent_find(items.begin(), items.end(),
                              [](ItemId a, ItemId b) { return a >= b; }) == items.end();
}

// True iff every element of `itemset` occurs in the sorted sequence `txn`.
inline bool contains_all(const Itemset& txn, const Itemset& itemset) {
    return std::includes(txn.begin(), txn.end(), itemset.begin(), itemset.end());
}

// Merge-intersection of two sorted lists. Every element-vs-element
// comparison is tallied into `comparisons`.
inline TidList intersect_counted(const TidList& a, const TidList& b,
                                 std::uint64_t& comparisons) {
    TidList out;
    out.reserve(std::min(a.size(), b.size()));
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        ++comparisons;
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace fim
