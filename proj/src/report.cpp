#include "fim/report.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace fim {

namespace {

using ordered_json = nlohmann::ordered_json;

AlgorithmColumn make_column(const MiningResult& result, std::size_t deepest_level) {
    AlgorithmColumn column;
    column.algorithm = result.algorithm;
    column.level_scans.resize(deepest_level, 0);
    column.level_tid_comparisons.resize(deepest_level, 0);
    for (std::size_t k = 1; k <= result.ledger.max_level() && k <= deepest_level; ++k) {
        column.level_scans[k - 1] = result.ledger.scans(k);
        column.level_tid_comparisons[k - 1] = result.ledger.tid_comparisons(k);
    }
    column.total_scans = result.ledger.total_scans();
    column.total_tid_comparisons = result.ledger.total_tid_comparisons();
    column.level_times_ms = result.level_times_ms;
    column.total_time_ms = std::accumulate(result.level_times_ms.begin(),
                                           result.level_times_ms.end(), 0.0);
    return column;
}

std::string format_ms(double ms) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
    return buffer;
}

}  // namespace

ComparisonReport compare(const TransactionDatabase& db, SupportThreshold support,
                         JoinStrategy strategy) {
    const MiningResult classic = mine_classic(db, support, strategy);
    const MiningResult filtered = mine_filtered(db, support, strategy);
    const MiningResult intersect = mine_intersect(db, support, strategy);

    ComparisonReport report;
    report.transaction_count = db.transaction_count();
    report.item_count = db.item_count();
    report.resolved_support = classic.resolved_support;
    report.strategy = strategy;
    report.deepest_level = std::max({classic.ledger.max_level(), filtered.ledger.max_level(),
                                     intersect.ledger.max_level()});
    report.equivalence_verified =
        same_levels(classic, filtered) && same_levels(classic, intersect);
    report.algorithms = {make_column(classic, report.deepest_level),
                         make_column(filtered, report.deepest_level),
                         make_column(intersect, report.deepest_level)};
    return report;
}

std::string render_tsv(const ComparisonReport& report, bool include_timings) {
    std::string out;
    out += "transactions\t" + std::to_string(report.transaction_count) + "\n";
    out += "items\t" + std::to_string(report.item_count) + "\n";
    out += "support\t" + std::to_string(report.resolved_support) + "\n";
    out += "join\t" + std::string(join_kind_name(report.strategy.kind)) + "\n";
    out += "prune\t" + std::to_string(report.strategy.prune ? 1 : 0) + "\n";
    out += "equivalence\t" + std::string(report.equivalence_verified ? "ok" : "MISMATCH") + "\n";
    out += "\nlevel";
    for (const AlgorithmColumn& column : report.algorithms) {
        out += "\t";
        out += algorithm_name(column.algorithm);
    }
    out += "\n";
    for (std::size_t level = 1; level <= report.deepest_level; ++level) {
        out += std::to_string(level);
        for (const AlgorithmColumn& column : report.algorithms) {
            out += "\t" + std::to_string(column.level_scans[level - 1]);
        }
        out += "\n";
    }
    out += "total";
    for (const AlgorithmColumn& column : report.algorithms) {
        out += "\t" + std::to_string(column.total_scans);
    }
    out += "\ntid_comparisons";
    for (const AlgorithmColumn& column : report.algorithms) {
        out += "\t" + std::to_string(column.total_tid_comparisons);
    }
    out += "\n";
    if (include_timings) {
        for (std::size_t level = 1; level <= report.deepest_level; ++level) {
            out += "time_ms_level_" + std::to_string(level);
            for (const AlgorithmColumn& column : report.algorithms) {
                out += "\t";
                out += level - 1 < column.level_times_ms.size()
                           ? format_ms(column.level_times_ms[level - 1])
                           : "0.000";
            }
            out += "\n";
        }
        out += "time_ms_total";
        for (const AlgorithmColumn& column : report.algorithms) {
            out += "\t" + format_ms(column.total_time_ms);
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const ComparisonReport& report, bool include_timings) {
    ordered_json doc;
    doc["report"] = "compare";
    doc["database"] = {{"transactions", report.transaction_count},
                       {"items", report.item_count}};
    doc["support"] = report.resolved_support;
    doc["join"] = {{"kind", join_kind_name(report.strategy.kind)},
                   {"prune", report.strategy.prune}};
    doc["equivalence_verified"] = report.equivalence_verified;
    doc["levels"] = report.deepest_level;
    doc["algorithms"] = ordered_json::array();
    for (const AlgorithmColumn& column : report.algorithms) {
        ordered_json entry;
        entry["name"] = algorithm_name(column.algorithm);
        entry["scans"] = {{"levels", column.level_scans}, {"total", column.total_scans}};
        entry["tid_comparisons"] = {{"levels", column.level_tid_comparisons},
                                    {"total", column.total_tid_comparisons}};
        if (include_timings) {
            entry["timings_ms"] = {{"levels", column.level_times_ms},
                                   {"total", column.total_time_ms}};
        }
        doc["algorithms"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

ComparisonReport report_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    if (doc.value("report", "") != "compare") {
        throw ParseError("report: expected a compare report");
    }
    ComparisonReport report;
    try {
        report.transaction_count = doc.at("database").at("transactions").get<std::size_t>();
        report.item_count = doc.at("database").at("items").get<std::size_t>();
        report.resolved_support = doc.at("support").get<std::uint64_t>();
        const std::string kind = doc.at("join").at("kind").get<std::string>();
        if (kind == join_kind_name(JoinKind::F1Extend)) {
            report.strategy.kind = JoinKind::F1Extend;
        } else if (kind == join_kind_name(JoinKind::ClassicSelfJoin)) {
            report.strategy.kind = JoinKind::ClassicSelfJoin;
        } else {
            throw ParseError("report: unknown join kind '" + kind + "'");
        }
        report.strategy.prune = doc.at("join").at("prune").get<bool>();
        report.equivalence_verified = doc.at("equivalence_verified").get<bool>();
        report.deepest_level = doc.at("levels").get<std::size_t>();
        const auto& algorithms = doc.at("algorithms");
        if (!algorithms.is_array() || algorithms.size() != report.algorithms.size()) {
            throw ParseError("report: expected exactly 3 algorithm entries");
        }
        for (std::size_t i = 0; i < report.algorithms.size(); ++i) {
            const auto& entry = algorithms[i];
            AlgorithmColumn& column = report.algorithms[i];
            const auto name = algorithm_from_name(entry.at("name").get<std::string>());
            if (!name) {
                throw ParseError("report: unknown algorithm name");
            }
            column.algorithm = *name;
            column.level_scans =
                entry.at("scans").at("levels").get<std::vector<std::uint64_t>>();
            column.total_scans = entry.at("scans").at("total").get<std::uint64_t>();
            column.level_tid_comparisons =
                entry.at("tid_comparisons").at("levels").get<std::vector<std::uint64_t>>();
            column.total_tid_comparisons =
                entry.at("tid_comparisons").at("total").get<std::uint64_t>();
            if (entry.contains("timings_ms")) {
                column.level_times_ms =
                    entry.at("timings_ms").at("levels").get<std::vector<double>>();
                column.total_time_ms = entry.at("timings_ms").at("total").get<double>();
            }
        }
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return report;
}

}  // namespace fim
