#include "fim/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fim/report.hpp"
#include "fim/synthetic.hpp"

namespace fim {

namespace {

using ordered_json = nlohmann::ordered_json;

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

TransactionDatabase load_database(const CliConfig& config, std::istream& in) {
    CliConfig::InputFormat format = config.input_format;
    const bool from_stdin = config.input_path.empty() || config.input_path == "-";
    if (format == CliConfig::InputFormat::Auto) {
        format = !from_stdin && ends_with(config.input_path, ".csv")
                     ? CliConfig::InputFormat::Csv
                     : CliConfig::InputFormat::Dat;
    }
    if (from_stdin) {
        return format == CliConfig::InputFormat::Csv ? parse_basket_csv(in) : parse_dat(in);
    }
    std::ifstream file(config.input_path);
    if (!file) {
        throw std::runtime_error("cannot open input file '" + config.input_path + "'");
    }
    return format == CliConfig::InputFormat::Csv ? parse_basket_csv(file) : parse_dat(file);
}

SupportThreshold make_support(const CliConfig& config) {
    if (config.support && config.min_frac) {
        throw std::invalid_argument("--support and --min-frac are mutually exclusive");
    }
    if (config.support) {
        return SupportThreshold::absolute(*config.support);
    }
    if (config.min_frac) {
        return SupportThreshold::relative(*config.min_frac);
    }
    throw std::invalid_argument("a support threshold is required (--support or --min-frac)");
}

void write_rendered(const CliConfig& config, std::ostream& out, const std::string& text) {
    if (config.output_path.empty() || config.output_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(config.output_path);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + config.output_path + "'");
    }
    file << text;
}

std::string format_ms(double ms) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
    return buffer;
}

std::string itemset_labels(const TransactionDatabase& db, const Itemset& itemset) {
    std::string text;
    for (std::size_t i = 0; i < itemset.size(); ++i) {
        if (i != 0) {
            text += ' ';
        }
        text += db.dictionary().label(itemset[i]);
    }
    return text;
}

std::string tid_labels(const TransactionDatabase& db, const TidList& tids) {
    std::string text;
    for (std::size_t i = 0; i < tids.size(); ++i) {
        if (i != 0) {
            text += ',';
        }
        text += db.tid_label(tids[i]);
    }
    return text;
}

std::string render_mine_tsv(const CliConfig& config, const TransactionDatabase& db,
                            const MiningResult& result) {
    std::string out;
    out += "algorithm\t" + std::string(algorithm_name(result.algorithm)) + "\n";
    out += "transactions\t" + std::to_string(db.transaction_count()) + "\n";
    out += "items\t" + std::to_string(db.item_count()) + "\n";
    out += "support\t" + std::to_string(result.resolved_support) + "\n";
    out += "join\t" + std::string(join_kind_name(result.strategy.kind)) + "\n";
    out += "prune\t" + std::to_string(result.strategy.prune ? 1 : 0) + "\n";
    out += "frequent_itemsets\t" + std::to_string(result.itemset_count()) + "\n";

    out += "\nk\titemset\tsupport";
    if (config.emit_tids) {
        out += "\ttids";
    }
    out += "\n";
    for (const FrequentLevel& level : result.levels) {
        for (const FrequentItemsetRecord& record : level.records) {
            out += std::to_string(level.k) + "\t" + itemset_labels(db, record.itemset) +
                   "\t" + std::to_string(record.support);
            if (config.emit_tids) {
                out += "\t";
                if (record.tids) {
                    out += tid_labels(db, *record.tids);
                }
            }
            out += "\n";
        }
    }

    out += "\nlevel\tscans\ttid_comparisons";
    if (config.timings) {
        out += "\ttime_ms";
    }
    out += "\n";
    const ScanLedger& ledger = result.ledger;
    for (std::size_t k = 1; k <= ledger.max_level(); ++k) {
        out += std::to_string(k) + "\t" + std::to_string(ledger.scans(k)) + "\t" +
               std::to_string(ledger.tid_comparisons(k));
        if (config.timings) {
            out += "\t";
            out += k - 1 < result.level_times_ms.size()
                       ? format_ms(result.level_times_ms[k - 1])
                       : "0.000";
        }
        out += "\n";
    }
    out += "total\t" + std::to_string(ledger.total_scans()) + "\t" +
           std::to_string(ledger.total_tid_comparisons());
    if (config.timings) {
        const double total = std::accumulate(result.level_times_ms.begin(),
                                             result.level_times_ms.end(), 0.0);
        out += "\t" + format_ms(total);
    }
    out += "\n";
    return out;
}

std::string render_mine_json(const CliConfig& config, const TransactionDatabase& db,
                             const MiningResult& result) {
    ordered_json doc;
    doc["report"] = "mine";
    doc["algorithm"] = algorithm_name(result.algorithm);
    doc["database"] = {{"transactions", db.transaction_count()}, {"items", db.item_count()}};
    doc["support"] = result.resolved_support;
    doc["join"] = {{"kind", join_kind_name(result.strategy.kind)},
                   {"prune", result.strategy.prune}};
    doc["frequent_itemsets"] = result.itemset_count();
    doc["levels"] = ordered_json::array();
    for (const FrequentLevel& level : result.levels) {
        ordered_json level_doc;
        level_doc["k"] = level.k;
        level_doc["itemsets"] = ordered_json::array();
        for (const FrequentItemsetRecord& record : level.records) {
            ordered_json entry;
            entry["items"] = ordered_json::array();
            for (ItemId item : record.itemset) {
                entry["items"].push_back(db.dictionary().label(item));
            }
            entry["support"] = record.support;
            if (config.emit_tids && record.tids) {
                entry["tids"] = ordered_json::array();
                for (Tid tid : *record.tids) {
                    entry["tids"].push_back(db.tid_label(tid));
                }
            }
            level_doc["itemsets"].push_back(std::move(entry));
        }
        doc["levels"].push_back(std::move(level_doc));
    }
    std::vector<std::uint64_t> scan_levels;
    std::vector<std::uint64_t> cmp_levels;
    for (std::size_t k = 1; k <= result.ledger.max_level(); ++k) {
        scan_levels.push_back(result.ledger.scans(k));
        cmp_levels.push_back(result.ledger.tid_comparisons(k));
    }
    doc["ledger"] = {
        {"scans", {{"levels", scan_levels}, {"total", result.ledger.total_scans()}}},
        {"tid_comparisons",
         {{"levels", cmp_levels}, {"total", result.ledger.total_tid_comparisons()}}}};
    if (config.timings) {
        const double total = std::accumulate(result.level_times_ms.begin(),
                                             result.level_times_ms.end(), 0.0);
        doc["timings_ms"] = {{"levels", result.level_times_ms}, {"total", total}};
    }
    return doc.dump(2) + "\n";
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int run_mine(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (config.threads < 1) {
            throw std::invalid_argument("--threads must be at least 1");
        }
        const SupportThreshold support = make_support(config);
        const TransactionDatabase db = load_database(config, in);
        MiningResult result;
        switch (config.algorithm) {
            case Algorithm::Classic:
                result = mine_classic(db, support, config.join, config.threads);
                break;
            case Algorithm::Filtered:
                result = mine_filtered(db, support, config.join, config.threads);
                break;
            case Algorithm::Intersect:
                result = mine_intersect(db, support, config.join, config.threads);
                break;
            case Algorithm::Oracle: {
                OracleOptions options;
                options.max_k = config.oracle_max_k;
                result = mine_oracle(db, support, options);
                break;
            }
        }
        const std::string text = config.output_format == CliConfig::OutputFormat::Json
                                     ? render_mine_json(config, db, result)
                                     : render_mine_tsv(config, db, result);
        write_rendered(config, out, text);
        return 0;
    });
}

int run_compare(const CliConfig& config, std::istream& in, std::ostream& out,
                std::ostream& err) {
    return guarded(err, [&]() -> int {
        const SupportThreshold support = make_support(config);
        const TransactionDatabase db = load_database(config, in);
        const ComparisonReport report = compare(db, support, config.join);
        const std::string text = config.output_format == CliConfig::OutputFormat::Json
                                     ? render_json(report, config.timings)
                                     : render_tsv(report, config.timings);
        write_rendered(config, out, text);
        if (!report.equivalence_verified) {
            err << "error: algorithm outputs disagree\n";
            return 1;
        }
        return 0;
    });
}

int run_gen(const CliConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const TransactionDatabase db =
            generate_synthetic(config.gen_transactions, config.gen_items,
                               config.gen_mean_basket, config.gen_seed);
        std::ostringstream text;
        write_dat(db, text);
        write_rendered(config, out, text.str());
        return 0;
    });
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case CliConfig::Command::Mine:
            return run_mine(config, in, out, err);
        case CliConfig::Command::Compare:
            return run_compare(config, in, out, err);
        case CliConfig::Command::Gen:
            return run_gen(config, out, err);
    }
    err << "error: unknown command\n";
    return 2;
}

}  // namespace fim
