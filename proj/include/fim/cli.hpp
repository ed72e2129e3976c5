#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "fim/candidates.hpp"
#include "fim/miner.hpp"

namespace fim {

// Parsed command line. The run_* functions return the process exit code:
// 0 success, 1 input/mining failure (or failed equivalence verification
// in compare), 2 invalid arguments. Diagnostics go to `err` one line at
// a time.
struct CliConfig {
    enum class Command { Mine, Compare, Gen };
    enum class InputFormat { Auto, Dat, Csv };
    enum class OutputFormat { Tsv, Json };

    Command command = Command::Mine;

    std::string input_path;  // empty or "-" = stdin
    InputFormat input_format = InputFormat::Auto;  // Auto: .csv extension, else dat

    std::optional<std::uint64_t> support;  // exactly one of support /
    std::optional<double> min_frac;        // min_frac for mine and compare

    Algorithm algorithm = Algorithm::Classic;
    JoinStrategy join;

    OutputFormat output_format = OutputFormat::Tsv;
    std::string output_path;  // empty or "-" = stdout

    bool emit_tids = false;
    bool timings = false;
    int threads = 1;
    std::size_t oracle_max_k = 0;  // 0 = auto

    // gen parameters
    std::uint64_t gen_transactions = 0;
    std::uint64_t gen_items = 0;
    double gen_mean_basket = 0.0;
    std::uint64_t gen_seed = 0;
};

int run_mine(const CliConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err);
int run_compare(const CliConfig& config, std::istream& in, std::ostream& out,
                std::ostream& err);
int run_gen(const CliConfig& config, std::ostream& out, std::ostream& err);

// Dispatch on config.command.
int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fim
