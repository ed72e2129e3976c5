#pragma once

#include <cstddef>
#include <vector>

#include "fim/types.hpp"

namespace fim {

enum class JoinKind {
    // Extend every (k-1)-itemset by each frequent item not already in it.
    // The default: its candidate counts match the scan accounting this
    // project reproduces.
    F1Extend,
    // Textbook self-join: pairs of (k-1)-itemsets sharing their first
    // k-2 items produce their union.
    ClassicSelfJoin,
};

struct JoinStrategy {
    JoinKind kind = JoinKind::F1Extend;
    bool prune = false;  // drop candidates with a (k-1)-subset missing from the previous level

    bool operator==(const JoinStrategy&) const = default;
};

const char* join_kind_name(JoinKind kind);

struct CandidateSet {
    std::size_t size_k = 0;
    std::vector<Itemset> itemsets;  // lexicographically sorted, duplicate-free
};

// True iff some (k-1)-subset of `candidate` is missing from `prev_level`,
// which must be lexicographically sorted.
bool has_infrequent_subset(const Itemset& candidate,
                           const std::vector<Itemset>& prev_level);

// Candidate generation for level |prev itemsets| + 1. All input itemsets
// must be canonical and of equal size; throws std::invalid_argument on
// mixed sizes. `frequent_items` are the frequent 1-itemset members, sorted
// ascending. Output is canonical: sorted, deduplicated, uniform size.
CandidateSet join(const std::vector<Itemset>& prev_level,
                  const std::vector<ItemId>& frequent_items,
                  JoinStrategy strategy);

}  // namespace fim
