#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace fim {

// Per-level cost accounting. One "scan" is one candidate-vs-transaction
// containment check. TID comparisons tally the element comparisons spent
// merging tid lists; they are tracked separately and never folded into
// the scan count. Levels are 1-based. Counters only grow.
class ScanLedger {
public:
    void add_scans(std::size_t level, std::uint64_t n) {
        touch(level);
        scans_[level] += n;
    }

    void add_tid_comparisons(std::size_t level, std::uint64_t n) {
        touch(level);
        tid_comparisons_[level] += n;
    }

    std::uint64_t scans(std::size_t level) const {
        return level < scans_.size() ? scans_[level] : 0;
    }

    std::uint64_t tid_comparisons(std::size_t level) const {
        return level < tid_comparisons_.size() ? tid_comparisons_[level] : 0;
    }

    std::uint64_t total_scans() const {
        return std::accumulate(scans_.begin(), scans_.end(), std::uint64_t{0});
    }

    std::uint64_t total_tid_comparisons() const {
        return std::accumulate(tid_comparisons_.begin(), tid_comparisons_.end(),
                               std::uint64_t{0});
    }

    // Deepest level recorded, counting levels touched with zero cost.
    std::size_t max_level() const {
        return scans_.empty() ? 0 : scans_.size() - 1;
    }

    bool operator==(const ScanLedger&) const = default;

private:
    void touch(std::size_t level) {
        if (level >= scans_.size()) {
            scans_.resize(level + 1, 0);
            tid_comparisons_.resize(level + 1, 0);
        }
    }

    // Index = level; slot 0 unused.
    std::vector<std::uint64_t> scans_;
    std::vector<std::uint64_t> tid_comparisons_;
};

}  // namespace fim
