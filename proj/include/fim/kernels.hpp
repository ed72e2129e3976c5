#pragma once

#include <cstdint>
#include <vector>

#include "fim/database.hpp"
#include "fim/types.hpp"

namespace fim::kernels {

// Per-level counting kernels. Each exists in a serial reference form and
// an OpenMP form; the `_omp` variants partition candidates across threads,
// write disjoint output slots, and reduce their tallies, so both forms
// produce identical results. The thread-count dispatchers at the bottom
// pick the serial path for threads <= 1.

// Full-scan counting: every candidate is checked against every
// transaction. counts[i] = support of candidates[i]. Returns the number
// of containment checks performed, |candidates| * |transactions|.
std::uint64_t count_full_scan_serial(const TransactionDatabase& db,
                                     const std::vector<Itemset>& candidates,
                                     std::vector<std::uint64_t>& counts);
std::uint64_t count_full_scan_omp(const TransactionDatabase& db,
                                  const std::vector<Itemset>& candidates,
                                  std::vector<std::uint64_t>& counts,
                                  int threads);

// Filtered counting: each candidate is checked only against the
// transactions in the tid list of its least-frequent member item (ties
// break to the smaller item id). Returns the number of containment
// checks, i.e. the sum of those tid-list lengths.
std::uint64_t count_min_item_scan_serial(const TransactionDatabase& db,
                                         const std::vector<Itemset>& candidates,
                                         std::vector<std::uint64_t>& counts);
std::uint64_t count_min_item_scan_omp(const TransactionDatabase& db,
                                      const std::vector<Itemset>& candidates,
                                      std::vector<std::uint64_t>& counts,
                                      int threads);

// Least-frequent member item of a candidate, ties to the smaller id.
ItemId min_support_item(const TransactionDatabase& db, const Itemset& candidate);

// Tid-list intersection: derives each candidate's tid list by intersecting
// a cached parent list from the previous level with the removed member's
// singleton list, which equals the full k-way intersection of the member
// lists. prev_itemsets must be lexicographically sorted and aligned with
// prev_tids, and every candidate must have at least one (k-1)-subset in
// prev_itemsets (join output always does). Performs no transaction scans;
// returns the number of TID element comparisons.
std::uint64_t intersect_tidlists_serial(const TransactionDatabase& db,
                                        const std::vector<Itemset>& candidates,
                                        const std::vector<Itemset>& prev_itemsets,
                                        const std::vector<const TidList*>& prev_tids,
                                        std::vector<TidList>& tids_out);
std::uint64_t intersect_tidlists_omp(const TransactionDatabase& db,
                                     const std::vector<Itemset>& candidates,
                                     const std::vector<Itemset>& prev_itemsets,
                                     const std::vector<const TidList*>& prev_tids,
                                     std::vector<TidList>& tids_out,
                                     int threads);

std::uint64_t count_full_scan(const TransactionDatabase& db,
                              const std::vector<Itemset>& candidates,
                              std::vector<std::uint64_t>& counts, int threads);
std::uint64_t count_min_item_scan(const TransactionDatabase& db,
                                  const std::vector<Itemset>& candidates,
                                  std::vector<std::uint64_t>& counts, int threads);
std::uint64_t intersect_tidlists(const TransactionDatabase& db,
                                 const std::vector<Itemset>& candidates,
                                 const std::vector<Itemset>& prev_itemsets,
                                 const std::vector<const TidList*>& prev_tids,
                                 std::vector<TidList>& tids_out, int threads);

}  // namespace fim::kernels
