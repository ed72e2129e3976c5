#include "fim/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fim::kernels {

namespace {

// Count how many transactions out of `tids` contain `candidate`.
std::uint64_t count_in_tidlist(const TransactionDatabase& db,
                               const Itemset& candidate,
                               const TidList& tids) {
    std::uint64_t matched = 0;
    const auto& txns = db.transactions();
    for (Tid tid : tids) {
        if (contains_all(txns[tid].items, candidate)) {
            ++matched;
        }
    }
    return matched;
}

}  // namespace

std::uint64_t count_full_scan_serial(const TransactionDatabase& db,
                                     const std::vector<Itemset>& candidates,
                                     std::vector<std::uint64_t>& counts) {
    counts.assign(candidates.size(), 0);
    const auto& txns = db.transactions();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::uint64_t matched = 0;
        for (const Transaction& txn : txns) {
            if (contains_all(txn.items, candidates[i])) {
                ++matched;
            }
        }
        counts[i] = matched;
    }
    return static_cast<std::uint64_t>(candidates.size()) *
           static_cast<std::uint64_t>(db.transaction_count());
}

std::uint64_t count_full_scan_omp(const TransactionDatabase& db,
                                  const std::vector<Itemset>& candidates,
                                  std::vector<std::uint64_t>& counts,
                                  int threads) {
    counts.assign(candidates.size(), 0);
#ifdef _OPENMP
    const auto& txns = db.transactions();
    const std::int64_t n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
        std::uint64_t matched = 0;
        for (const Transaction& txn : txns) {
            if (contains_all(txn.items, candidates[i])) {
                ++matched;
            }
        }
        counts[static_cast<std::size_t>(i)] = matched;
    }
    return static_cast<std::uint64_t>(candidates.size()) *
           static_cast<std::uint64_t>(db.transaction_count());
#else
    (void)threads;
    return count_full_scan_serial(db, candidates, counts);
#endif
}

ItemId min_support_item(const TransactionDatabase& db, const Itemset& candidate) {
    if (candidate.empty()) {
        throw std::invalid_argument("min_support_item: empty itemset");
    }
    ItemId best = candidate.front();
    std::size_t best_len = db.tid_list(best).size();
    for (std::size_t i = 1; i < candidate.size(); ++i) {
        const std::size_t len = db.tid_list(candidate[i]).size();
        if (len < best_len) {  // ties keep the earlier (smaller) item id
            best = candidate[i];
            best_len = len;
        }
    }
    return best;
}

std::uint64_t count_min_item_scan_serial(const TransactionDatabase& db,
                                         const std::vector<Itemset>& candidates,
                                         std::vector<std::uint64_t>& counts) {
    counts.assign(candidates.size(), 0);
    std::uint64_t scans = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const TidList& tids = db.tid_list(min_support_item(db, candidates[i]));
        counts[i] = count_in_tidlist(db, candidates[i], tids);
        scans += tids.size();
    }
    return scans;
}

std::uint64_t count_min_item_scan_omp(const TransactionDatabase& db,
                                      const std::vector<Itemset>& candidates,
                                      std::vector<std::uint64_t>& counts,
                                      int threads) {
    counts.assign(candidates.size(), 0);
    std::uint64_t scans = 0;
#ifdef _OPENMP
    const std::int64_t n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) reduction(+ : scans)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        const TidList& tids = db.tid_list(min_support_item(db, candidates[idx]));
        counts[idx] = count_in_tidlist(db, candidates[idx], tids);
        scans += tids.size();
    }
    return scans;
#else
    (void)threads;
    return count_min_item_scan_serial(db, candidates, counts);
#endif
}

namespace {

// Resolve a candidate's (k-1)-parent in the previous level and intersect the
// parent's cached TID list with the removed member's level-1 list.  Removal
// is tried last-to-first; the join guarantees at least one parent exists.
TidList intersect_one(const TransactionDatabase& db,
                      const Itemset& candidate,
                      const std::vector<Itemset>& prev_itemsets,
                      const std::vector<const TidList*>& prev_tids,
                      std::uint64_t& comparisons) {
    Itemset subset(candidate.size() - 1);
    for (std::size_t omit = candidate.size(); omit-- > 0;) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != omit) {
                subset[w++] = candidate[i];
            }
        }
        const auto it = std::lower_bound(prev_itemsets.begin(), prev_itemsets.end(), subset);
        if (it != prev_itemsets.end() && *it == subset) {
            const std::size_t parent = static_cast<std::size_t>(it - prev_itemsets.begin());
            return intersect_counted(*prev_tids[parent], db.tid_list(candidate[omit]),
                                     comparisons);
        }
    }
    throw std::logic_error("intersect: candidate has no parent in the previous level");
}

}  // namespace

std::uint64_t intersect_tidlists_serial(const TransactionDatabase& db,
                                        const std::vector<Itemset>& candidates,
                                        const std::vector<Itemset>& prev_itemsets,
                                        const std::vector<const TidList*>& prev_tids,
                                        std::vector<TidList>& tids_out) {
    tids_out.assign(candidates.size(), TidList{});
    std::uint64_t comparisons = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        tids_out[i] = intersect_one(db, candidates[i], prev_itemsets, prev_tids, comparisons);
    }
    return comparisons;
}

std::uint64_t intersect_tidlists_omp(const TransactionDatabase& db,
                                     const std::vector<Itemset>& candidates,
                                     const std::vector<Itemset>& prev_itemsets,
                                     const std::vector<const TidList*>& prev_tids,
                                     std::vector<TidList>& tids_out,
                                     int threads) {
    tids_out.assign(candidates.size(), TidList{});
    std::uint64_t comparisons = 0;
#ifdef _OPENMP
    const std::int64_t n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) reduction(+ : comparisons)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        tids_out[idx] =
            intersect_one(db, candidates[idx], prev_itemsets, prev_tids, comparisons);
    }
    return comparisons;
#else
    (void)threads;
    return intersect_tidlists_serial(db, candidates, prev_itemsets, prev_tids, tids_out);
#endif
}

std::uint64_t count_full_scan(const TransactionDatabase& db,
                              const std::vector<Itemset>& candidates,
                              std::vector<std::uint64_t>& counts,
                              int threads) {
    if (threads <= 1) {
        return count_full_scan_serial(db, candidates, counts);
    }
    return count_full_scan_omp(db, candidates, counts, threads);
}

std::uint64_t count_min_item_scan(const TransactionDatabase& db,
                                  const std::vector<Itemset>& candidates,
                                  std::vector<std::uint64_t>& counts,
                                  int threads) {
    if (threads <= 1) {
        return count_min_item_scan_serial(db, candidates, counts);
    }
    return count_min_item_scan_omp(db, candidates, counts, threads);
}

std::uint64_t intersect_tidlists(const TransactionDatabase& db,
                                 const std::vector<Itemset>& candidates,
                                 const std::vector<Itemset>& prev_itemsets,
                                 const std::vector<const TidList*>& prev_tids,
                                 std::vector<TidList>& tids_out,
                                 int threads) {
    if (threads <= 1) {
        return intersect_tidlists_serial(db, candidates, prev_itemsets, prev_tids, tids_out);
    }
    return intersect_tidlists_omp(db, candidates, prev_itemsets, prev_tids, tids_out, threads);
}

}  // namespace fim::kernels
