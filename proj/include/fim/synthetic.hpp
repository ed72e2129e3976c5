#pragma once

#include <cstdint>

#include "fim/database.hpp"

namespace fim {

// Deterministic synthetic basket data for benchmarking. Basket sizes follow
// a geometric distribution with the given mean, clamped to
// [1, item_universe]; members are drawn without replacement from a
// Zipf(0.99) popularity ranking over the universe, so low-numbered labels
// co-occur often enough to form frequent itemsets. Labels are "1".."N" and
// the whole universe is interned up front (unused items keep empty tid
// lists). Identical arguments always produce byte-identical databases.
TransactionDatabase generate_synthetic(std::uint64_t transaction_count,
                                       std::uint64_t item_universe,
                                       double mean_basket,
                                       std::uint64_t seed);

}  // namespace fim
