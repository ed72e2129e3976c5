#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fim/candidates.hpp"
#include "fim/database.hpp"
#include "fim/ledger.hpp"

namespace fim {

enum class Algorithm { Classic, Filtered, Intersect, Oracle };

const char* algorithm_name(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// Minimum support, absolute or as a fraction of the transaction count.
class SupportThreshold {
public:
    static SupportThreshold absolute(std::uint64_t count);  // count >= 1
    static SupportThreshold relative(double fraction);      // fraction in (0, 1]

    // Relative thresholds resolve to ceil(fraction * transactions),
    // clamped to >= 1. Absolute thresholds resolve to themselves.
    std::uint64_t resolve(std::size_t transaction_count) const;

private:
    SupportThreshold() = default;
    bool absolute_ = true;
    std::uint64_t count_ = 1;
    double fraction_ = 0.0;
};

struct FrequentItemsetRecord {
    Itemset itemset;
    std::uint64_t support = 0;
    std::optional<TidList> tids;  // present when the algorithm derives it

    bool operator==(const FrequentItemsetRecord&) const = default;
};

struct FrequentLevel {
    std::size_t k = 0;
    std::vector<FrequentItemsetRecord> records;  // lexicographic itemset order

    bool operator==(const FrequentLevel&) const = default;
};

struct MiningResult {
    Algorithm algorithm = Algorithm::Classic;
    JoinStrategy strategy;
    std::uint64_t resolved_support = 0;
    // Levels k = 1, 2, ... up to the last nonempty one; empty when there
    // are no frequent 1-itemsets.
    std::vector<FrequentLevel> levels;
    ScanLedger ledger;
    std::vector<double> level_times_ms;  // one entry per attempted level

    std::size_t itemset_count() const;
};

// Binary search through a level's lexicographically ordered records;
// nullptr when absent.
const FrequentItemsetRecord* find_record(const FrequentLevel& level,
                                         const Itemset& itemset);

// Frequent 1-itemsets with their tid lists. Accounts one scan per
// (item, transaction) pair: |items| * |transactions| at level 1.
FrequentLevel frequent_one(const TransactionDatabase& db,
                           std::uint64_t resolved_support, ScanLedger& ledger);

// The three level-wise miners. They produce identical levels; only the
// counting step and therefore the ledger differ:
//   classic   — every candidate against every transaction
//   filtered  — only the tid list of the candidate's least-frequent member
//   intersect — tid-list intersection; zero transaction scans at k >= 2
// threads > 1 parallelizes per-candidate counting; results are identical
// to the serial run.
MiningResult mine_classic(const TransactionDatabase& db, SupportThreshold support,
                          JoinStrategy strategy = {}, int threads = 1);
MiningResult mine_filtered(const TransactionDatabase& db, SupportThreshold support,
                           JoinStrategy strategy = {}, int threads = 1);
MiningResult mine_intersect(const TransactionDatabase& db, SupportThreshold support,
                            JoinStrategy strategy = {}, int threads = 1);

struct OracleOptions {
    std::size_t max_k = 0;                      // 0 = up to the largest basket
    std::uint64_t candidate_bound = 5'000'000;  // refuse above this many enumerations
};

// Brute-force ground truth: enumerates every itemset over the frequent
// items and counts each one by direct horizontal scan. Uses neither the
// join step nor the vertical index, and makes no ledger guarantees.
// Throws when the projected enumeration count exceeds the bound.
MiningResult mine_oracle(const TransactionDatabase& db, SupportThreshold support,
                         OracleOptions options = {});

// True when both results hold the same (itemset, support) pairs, level by
// level. Tid lists and ledgers are not compared.
bool same_levels(const MiningResult& a, const MiningResult& b);

}  // namespace fim
