#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fim/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Level-wise frequent-itemset mining with per-level scan accounting"};
    app.require_subcommand(1);

    fim::CliConfig config;
    std::string algorithm = "classic";
    std::string join = "f1";
    std::string input_format = "auto";
    std::string output_format = "tsv";

    const auto add_io_options = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", config.input_path,
                        "Input path; '-' or omitted reads stdin");
        cmd->add_option("--input-format", input_format, "Input format")
            ->check(CLI::IsMember({"auto", "dat", "csv"}))
            ->capture_default_str();
        cmd->add_option("-o,--output", config.output_path,
                        "Output path; '-' or omitted writes stdout");
        cmd->add_option("-f,--format", output_format, "Output format")
            ->check(CLI::IsMember({"tsv", "json"}))
            ->capture_default_str();
    };
    const auto add_support_options = [&](CLI::App* cmd) {
        auto* absolute = cmd->add_option("-s,--support", config.support,
                                         "Absolute minimum support count (>= 1)");
        auto* fraction = cmd->add_option(
            "--min-frac", config.min_frac,
            "Relative minimum support in (0, 1]; resolves to ceil(frac * transactions)");
        absolute->excludes(fraction);
        fraction->excludes(absolute);
    };
    const auto add_join_options = [&](CLI::App* cmd) {
        cmd->add_option("--join", join, "Candidate generation: f1 or classic")
            ->check(CLI::IsMember({"f1", "classic"}))
            ->capture_default_str();
        cmd->add_flag("--prune", config.join.prune,
                      "Drop candidates with an infrequent (k-1)-subset");
    };

    CLI::App* mine = app.add_subcommand(
        "mine", "Mine frequent itemsets with one algorithm and report its cost ledger");
    add_io_options(mine);
    add_support_options(mine);
    add_join_options(mine);
    mine->add_option("-a,--algorithm", algorithm,
                     "classic | filtered | intersect | oracle")
        ->check(CLI::IsMember({"classic", "filtered", "intersect", "oracle"}))
        ->capture_default_str();
    mine->add_flag("--emit-tids", config.emit_tids,
                   "Include TID lists for itemsets whose algorithm derives them");
    mine->add_flag("--timings", config.timings, "Include per-level wall-clock timings");
    mine->add_option("-t,--threads", config.threads,
                     "Worker threads for the counting kernels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    mine->add_option("--max-k", config.oracle_max_k,
                     "Oracle only: largest itemset size to enumerate (0 = auto)")
        ->capture_default_str();

    CLI::App* cmp = app.add_subcommand(
        "compare", "Run classic, filtered, and intersect side by side and compare ledgers");
    add_io_options(cmp);
    add_support_options(cmp);
    add_join_options(cmp);
    cmp->add_flag("--timings", config.timings, "Include per-level wall-clock timings");

    CLI::App* gen = app.add_subcommand(
        "gen", "Generate a deterministic synthetic .dat basket database");
    gen->add_option("--txns", config.gen_transactions, "Number of transactions")
        ->default_val(std::uint64_t{1000})
        ->capture_default_str();
    gen->add_option("--items", config.gen_items, "Item universe size")
        ->default_val(std::uint64_t{100})
        ->capture_default_str();
    gen->add_option("--mean-basket", config.gen_mean_basket, "Mean basket size (> 0)")
        ->default_val(8.0)
        ->capture_default_str();
    gen->add_option("--seed", config.gen_seed, "RNG seed")
        ->default_val(std::uint64_t{1})
        ->capture_default_str();
    gen->add_option("-o,--output", config.output_path,
                    "Output path; '-' or omitted writes stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (mine->parsed()) {
        config.command = fim::CliConfig::Command::Mine;
    } else if (cmp->parsed()) {
        config.command = fim::CliConfig::Command::Compare;
    } else {
        config.command = fim::CliConfig::Command::Gen;
    }
    config.algorithm = *fim::algorithm_from_name(algorithm);
    config.join.kind =
        join == "classic" ? fim::JoinKind::ClassicSelfJoin : fim::JoinKind::F1Extend;
    config.input_format = input_format == "dat"   ? fim::CliConfig::InputFormat::Dat
                          : input_format == "csv" ? fim::CliConfig::InputFormat::Csv
                                                  : fim::CliConfig::InputFormat::Auto;
    config.output_format = output_format == "json" ? fim::CliConfig::OutputFormat::Json
                                                   : fim::CliConfig::OutputFormat::Tsv;

    return fim::run(config, std::cin, std::cout, std::cerr);
}
