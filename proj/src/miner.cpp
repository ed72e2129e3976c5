#include "fim/miner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fim/kernels.hpp"

namespace fim {

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Classic:
            return "classic";
        case Algorithm::Filtered:
            return "filtered";
        case Algorithm::Intersect:
            return "intersect";
        case Algorithm::Oracle:
            return "oracle";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    if (name == "classic") return Algorithm::Classic;
    if (name == "filtered") return Algorithm::Filtered;
    if (name == "intersect") return Algorithm::Intersect;
    if (name == "oracle") return Algorithm::Oracle;
    return std::nullopt;
}

SupportThreshold SupportThreshold::absolute(std::uint64_t count) {
    if (count == 0) {
        throw std::invalid_argument("support count must be at least 1");
    }
    SupportThreshold t;
    t.absolute_ = true;
    t.count_ = count;
    return t;
}

SupportThreshold SupportThreshold::relative(double fraction) {
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw std::invalid_argument("support fraction must lie in (0, 1]");
    }
    SupportThreshold t;
    t.absolute_ = false;
    t.fraction_ = fraction;
    return t;
}

std::uint64_t SupportThreshold::resolve(std::size_t transaction_count) const {
    if (absolute_) {
        return count_;
    }
    const double raw = std::ceil(fraction_ * static_cast<double>(transaction_count));
    return raw <= 1.0 ? 1 : static_cast<std::uint64_t>(raw);
}

std::size_t MiningResult::itemset_count() const {
    std::size_t n = 0;
    for (const FrequentLevel& level : levels) {
        n += level.records.size();
    }
    return n;
}

const FrequentItemsetRecord* find_record(const FrequentLevel& level, const Itemset& itemset) {
    const auto it = std::lower_bound(
        level.records.begin(), level.records.end(), itemset,
        [](const FrequentItemsetRecord& r, const Itemset& key) { return r.itemset < key; });
    if (it != level.records.end() && it->itemset == itemset) {
        return &*it;
    }
    return nullptr;
}

FrequentLevel frequent_one(const TransactionDatabase& db, std::uint64_t resolved_support,
                           ScanLedger& ledger) {
    ledger.add_scans(1, static_cast<std::uint64_t>(db.item_count()) *
                            static_cast<std::uint64_t>(db.transaction_count()));
    FrequentLevel level;
    level.k = 1;
    for (ItemId item = 0; item < db.item_count(); ++item) {
        const TidList& tids = db.tid_list(item);
        if (tids.size() >= resolved_support) {
            FrequentItemsetRecord record;
            record.itemset = Itemset{item};
            record.support = tids.size();
            record.tids = tids;
            level.records.push_back(std::move(record));
        }
    }
    return level;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

MiningResult mine_levelwise(Algorithm algorithm, const TransactionDatabase& db,
                            SupportThreshold support, JoinStrategy strategy, int threads) {
    MiningResult result;
    result.algorithm = algorithm;
    result.strategy = strategy;
    result.resolved_support = support.resolve(db.transaction_count());

    auto level_start = Clock::now();
    FrequentLevel l1 = frequent_one(db, result.resolved_support, result.ledger);
    result.level_times_ms.push_back(elapsed_ms(level_start));
    if (l1.records.empty()) {
        return result;
    }

    std::vector<ItemId> frequent_items;
    frequent_items.reserve(l1.records.size());
    for (const FrequentItemsetRecord& r : l1.records) {
        frequent_items.push_back(r.itemset.front());
    }
    result.levels.push_back(std::move(l1));

    for (std::size_t k = 2;; ++k) {
        const FrequentLevel& prev = result.levels.back();
        std::vector<Itemset> prev_itemsets;
        prev_itemsets.reserve(prev.records.size());
        for (const FrequentItemsetRecord& r : prev.records) {
            prev_itemsets.push_back(r.itemset);
        }

        level_start = Clock::now();
        CandidateSet cands = join(prev_itemsets, frequent_items, strategy);
        if (cands.itemsets.empty()) {
            break;
        }

        std::vector<std::uint64_t> counts;
        std::vector<TidList> tids;
        switch (algorithm) {
            case Algorithm::Classic: {
                const std::uint64_t scans =
                    kernels::count_full_scan(db, cands.itemsets, counts, threads);
                result.ledger.add_scans(k, scans);
                break;
            }
            case Algorithm::Filtered: {
                const std::uint64_t scans =
                    kernels::count_min_item_scan(db, cands.itemsets, counts, threads);
                result.ledger.add_scans(k, scans);
                break;
            }
            case Algorithm::Intersect: {
                std::vector<const TidList*> prev_tids;
                prev_tids.reserve(prev.records.size());
                for (const FrequentItemsetRecord& r : prev.records) {
                    prev_tids.push_back(&*r.tids);
                }
                const std::uint64_t comparisons = kernels::intersect_tidlists(
                    db, cands.itemsets, prev_itemsets, prev_tids, tids, threads);
                result.ledger.add_scans(k, 0);
                result.ledger.add_tid_comparisons(k, comparisons);
                counts.resize(cands.itemsets.size());
                for (std::size_t i = 0; i < tids.size(); ++i) {
                    counts[i] = tids[i].size();
                }
                break;
            }
            case Algorithm::Oracle:
                throw std::logic_error("oracle does not run level-wise");
        }

        FrequentLevel level;
        level.k = k;
        for (std::size_t i = 0; i < cands.itemsets.size(); ++i) {
            if (counts[i] >= result.resolved_support) {
                FrequentItemsetRecord record;
                record.itemset = std::move(cands.itemsets[i]);
                record.support = counts[i];
                if (algorithm == Algorithm::Intersect) {
                    record.tids = std::move(tids[i]);
                }
                level.records.push_back(std::move(record));
            }
        }
        result.level_times_ms.push_back(elapsed_ms(level_start));
        if (level.records.empty()) {
            break;
        }
        result.levels.push_back(std::move(level));
    }
    return result;
}

}  // namespace

MiningResult mine_classic(const TransactionDatabase& db, SupportThreshold support,
                          JoinStrategy strategy, int threads) {
    return mine_levelwise(Algorithm::Classic, db, support, strategy, threads);
}

MiningResult mine_filtered(const TransactionDatabase& db, SupportThreshold support,
                           JoinStrategy strategy, int threads) {
    return mine_levelwise(Algorithm::Filtered, db, support, strategy, threads);
}

MiningResult mine_intersect(const TransactionDatabase& db, SupportThreshold support,
                            JoinStrategy strategy, int threads) {
    return mine_levelwise(Algorithm::Intersect, db, support, strategy, threads);
}

MiningResult mine_oracle(const TransactionDatabase& db, SupportThreshold support,
                         OracleOptions options) {
    MiningResult result;
    result.algorithm = Algorithm::Oracle;
    result.resolved_support = support.resolve(db.transaction_count());

    // Frequent items by direct horizontal count; the vertical index stays
    // untouched so this path shares nothing with the miners under test.
    std::vector<std::uint64_t> item_counts(db.item_count(), 0);
    for (const Transaction& txn : db.transactions()) {
        for (ItemId item : txn.items) {
            ++item_counts[item];
        }
    }
    std::vector<ItemId> freq;
    for (ItemId item = 0; item < db.item_count(); ++item) {
        if (item_counts[item] >= result.resolved_support) {
            freq.push_back(item);
        }
    }

    const std::size_t n = freq.size();
    std::size_t max_k = options.max_k == 0 ? db.max_transaction_size() : options.max_k;
    max_k = std::min(max_k, n);

    // Project sum_{k=1..max_k} C(n, k) before enumerating anything.
    {
        bool exceeded = false;
        std::uint64_t projected = 0;
        std::uint64_t c = 1;
        for (std::size_t k = 1; k <= max_k; ++k) {
            const std::uint64_t factor = static_cast<std::uint64_t>(n - k + 1);
            if (c > std::numeric_limits<std::uint64_t>::max() / factor) {
                exceeded = true;
                break;
            }
            c = c * factor / static_cast<std::uint64_t>(k);
            if (c > options.candidate_bound || projected > options.candidate_bound - c) {
                exceeded = true;
                break;
            }
            projected += c;
        }
        if (exceeded) {
            throw std::runtime_error("oracle: candidate bound exceeded");
        }
    }

    for (std::size_t k = 1; k <= max_k; ++k) {
        FrequentLevel level;
        level.k = k;
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) {
            pick[i] = i;
        }
        Itemset candidate(k);
        while (true) {
            for (std::size_t i = 0; i < k; ++i) {
                candidate[i] = freq[pick[i]];
            }
            std::uint64_t count = 0;
            for (const Transaction& txn : db.transactions()) {
                if (contains_all(txn.items, candidate)) {
                    ++count;
                }
            }
            if (count >= result.resolved_support) {
                FrequentItemsetRecord record;
                record.itemset = candidate;
                record.support = count;
                level.records.push_back(std::move(record));
            }
            // Advance to the next k-combination of {0, ..., n-1}.
            std::size_t pos = k;
            while (pos-- > 0) {
                if (pick[pos] != pos + n - k) {
                    break;
                }
            }
            if (pos == static_cast<std::size_t>(-1)) {
                break;
            }
            ++pick[pos];
            for (std::size_t i = pos + 1; i < k; ++i) {
                pick[i] = pick[i - 1] + 1;
            }
        }
        if (level.records.empty()) {
            break;
        }
        result.levels.push_back(std::move(level));
    }
    return result;
}

bool same_levels(const MiningResult& a, const MiningResult& b) {
    if (a.levels.size() != b.levels.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        const FrequentLevel& la = a.levels[i];
        const FrequentLevel& lb = b.levels[i];
        if (la.k != lb.k || la.records.size() != lb.records.size()) {
            return false;
        }
        for (std::size_t j = 0; j < la.records.size(); ++j) {
            if (la.records[j].itemset != lb.records[j].itemset ||
                la.records[j].support != lb.records[j].support) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace fim
