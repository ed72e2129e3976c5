#include "fim/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace fim {

const char* join_kind_name(JoinKind kind) {
    switch (kind) {
        case JoinKind::F1Extend:
            return "f1";
        case JoinKind::ClassicSelfJoin:
            return "classic";
    }
    return "unknown";
}

bool has_infrequent_subset(const Itemset& candidate,
                           const std::vector<Itemset>& prev_level) {
    if (candidate.size() <= 1) {
        return false;
    }
    Itemset subset(candidate.size() - 1);
    for (std::size_t omit = 0; omit < candidate.size(); ++omit) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != omit) {
                subset[w++] = candidate[i];
            }
        }
        if (!std::binary_search(prev_level.begin(), prev_level.end(), subset)) {
            return true;
        }
    }
    return false;
}

CandidateSet join(const std::vector<Itemset>& prev_level,
                  const std::vector<ItemId>& frequent_items,
                  JoinStrategy strategy) {
    CandidateSet out;
    if (prev_level.empty()) {
        return out;
    }
    const std::size_t prev_k = prev_level.front().size();
    if (prev_k == 0) {
        throw std::invalid_argument("join: previous level holds an empty itemset");
    }
    for (const Itemset& s : prev_level) {
        if (s.size() != prev_k) {
            throw std::invalid_argument("join: previous level mixes itemset sizes");
        }
    }
    out.size_k = prev_k + 1;

    std::vector<Itemset> sorted_prev = prev_level;
    std::sort(sorted_prev.begin(), sorted_prev.end());

    std::vector<Itemset> cands;
    if (strategy.kind == JoinKind::F1Extend) {
        for (const Itemset& s : sorted_prev) {
            for (ItemId f : frequent_items) {
                if (std::binary_search(s.begin(), s.end(), f)) {
                    continue;
                }
                Itemset c = s;
                c.insert(std::lower_bound(c.begin(), c.end(), f), f);
                cands.push_back(std::move(c));
            }
        }
    } else {
        for (std::size_t i = 0; i < sorted_prev.size(); ++i) {
            for (std::size_t j = i + 1; j < sorted_prev.size(); ++j) {
                const Itemset& a = sorted_prev[i];
                const Itemset& b = sorted_prev[j];
                if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) {
                    break;  // sorted order: later itemsets differ in the prefix too
                }
                Itemset c = a;
                c.push_back(b.back());
                cands.push_back(std::move(c));
            }
        }
    }

    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (strategy.prune) {
        cands.erase(std::remove_if(cands.begin(), cands.end(),
                                   [&](const Itemset& c) {
                                       return has_infrequent_subset(c, sorted_prev);
                                   }),
                    cands.end());
    }
    out.itemsets = std::move(cands);
    return out;
}

}  // namespace fim
