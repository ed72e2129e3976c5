// Benchmark comparing the serial reference kernels against the OpenMP
// kernels on a synthetic database. Verifies that both paths produce the
// same frequent itemsets and the same ledger before reporting timings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fim/miner.hpp"
#include "fim/synthetic.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double median_ms(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

template <typename Fn>
double time_ms(Fn&& fn, int reps, fim::MiningResult& last) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        last = fn();
        samples.push_back(
            std::chrono::duration<double, std::milli>(Clock::now() - start).count());
    }
    return median_ms(std::move(samples));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs. OpenMP kernel benchmark"};

    std::uint64_t txns = 10000;
    std::uint64_t items = 100;
    double mean_basket = 8.0;
    std::uint64_t seed = 42;
    std::uint64_t support = 200;
    int threads =
#ifdef _OPENMP
        omp_get_max_threads();
#else
        1;
#endif
    int reps = 5;

    app.add_option("--txns", txns, "Transactions to generate")->capture_default_str();
    app.add_option("--items", items, "Item universe size")->capture_default_str();
    app.add_option("--mean-basket", mean_basket, "Mean basket size")->capture_default_str();
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--support", support, "Absolute minimum support")->capture_default_str();
    app.add_option("--threads", threads, "Threads for the parallel runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--reps", reps, "Repetitions per measurement (median reported)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const fim::TransactionDatabase db =
        fim::generate_synthetic(txns, items, mean_basket, seed);
    const fim::SupportThreshold threshold = fim::SupportThreshold::absolute(support);

    std::printf("bench\ttxns=%llu\titems=%llu\tmean_basket=%.2f\tseed=%llu\tsupport=%llu\tthreads=%d\treps=%d\n",
                static_cast<unsigned long long>(txns),
                static_cast<unsigned long long>(items), mean_basket,
                static_cast<unsigned long long>(seed),
                static_cast<unsigned long long>(support), threads, reps);
    std::printf("algorithm\tserial_ms\tparallel_ms\tspeedup\titemsets\tscans\ttid_comparisons\n");

    struct Entry {
        const char* name;
        fim::MiningResult (*run)(const fim::TransactionDatabase&, fim::SupportThreshold,
                                 fim::JoinStrategy, int);
    };
    const Entry entries[] = {
        {"classic", &fim::mine_classic},
        {"filtered", &fim::mine_filtered},
        {"intersect", &fim::mine_intersect},
    };

    bool mismatch = false;
    for (const Entry& entry : entries) {
        fim::MiningResult serial;
        fim::MiningResult parallel;
        const double serial_ms = time_ms(
            [&] { return entry.run(db, threshold, fim::JoinStrategy{}, 1); }, reps, serial);
        const double parallel_ms = time_ms(
            [&] { return entry.run(db, threshold, fim::JoinStrategy{}, threads); }, reps,
            parallel);
        if (!fim::same_levels(serial, parallel) || serial.ledger != parallel.ledger) {
            std::cerr << "error: serial and parallel runs disagree for " << entry.name
                      << "\n";
            mismatch = true;
            continue;
        }
        std::printf("%s\t%.3f\t%.3f\t%.2f\t%zu\t%llu\t%llu\n", entry.name, serial_ms,
                    parallel_ms, parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0,
                    serial.itemset_count(),
                    static_cast<unsigned long long>(serial.ledger.total_scans()),
                    static_cast<unsigned long long>(serial.ledger.total_tid_comparisons()));
    }
    return mismatch ? 1 : 0;
}
