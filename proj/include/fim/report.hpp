#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fim/miner.hpp"

namespace fim {

struct AlgorithmColumn {
    Algorithm algorithm = Algorithm::Classic;
    std::vector<std::uint64_t> level_scans;  // index 0 = level 1
    std::vector<std::uint64_t> level_tid_comparisons;
    std::uint64_t total_scans = 0;
    std::uint64_t total_tid_comparisons = 0;
    std::vector<double> level_times_ms;
    double total_time_ms = 0.0;

    bool operator==(const AlgorithmColumn&) const = default;
};

// Side-by-side scan accounting for the three miners on one database.
struct ComparisonReport {
    std::size_t transaction_count = 0;
    std::size_t item_count = 0;
    std::uint64_t resolved_support = 0;
    JoinStrategy strategy;
    std::size_t deepest_level = 0;  // deepest level any miner attempted
    bool equivalence_verified = false;
    std::array<AlgorithmColumn, 3> algorithms;  // classic, filtered, intersect

    bool operator==(const ComparisonReport&) const = default;
};

// Runs all three miners single-threaded on the same database and checks
// that their outputs agree; equivalence_verified reports that check.
ComparisonReport compare(const TransactionDatabase& db, SupportThreshold support,
                         JoinStrategy strategy = {});

// Level-by-algorithm table: a scans block, a tid_comparisons block, and
// (optionally) a timing block. Tab separators, LF endings, deterministic
// except for the timing block.
std::string render_tsv(const ComparisonReport& report, bool include_timings = false);

// Stable JSON schema with fixed key order (documented in the README).
// Timings are emitted only on request so the default output is
// byte-deterministic.
std::string render_json(const ComparisonReport& report, bool include_timings = false);

// Parses render_json output back; absent timings read as zeros.
ComparisonReport report_from_json(const std::string& text);

}  // namespace fim
