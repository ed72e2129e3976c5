#include "fim/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fim {

namespace {

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.  We avoid
// std::uniform_real_distribution because its output sequence is
// implementation-defined; this mapping is stable across platforms.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Geometric basket-size sampler with the given mean, clamped to
// [1, universe].  Inverse-CDF method so the draw count per basket is fixed.
std::size_t sample_basket_size(std::mt19937_64& rng, double mean, std::size_t universe) {
    if (mean <= 1.0) {
        return 1;
    }
    const double p = 1.0 / mean;
    const double u = unit_uniform(rng);
    const double raw = 1.0 + std::floor(std::log1p(-u) / std::log1p(-p));
    std::size_t size = raw < 1.0 ? 1 : static_cast<std::size_t>(raw);
    return std::min(size, universe);
}

// Zipf(0.99) sampler over {0, ..., n-1} using the standard zeta/eta
// approximation.  Low ranks are heavily favoured, which yields the skewed
// item popularity typical of market-basket data.
class ZipfSampler {
public:
    ZipfSampler(std::size_t n, double theta) : n_(n), theta_(theta) {
        zeta_n_ = zeta(n_, theta_);
        const double zeta2 = zeta(2, theta_);
        alpha_ = 1.0 / (1.0 - theta_);
        eta_ = (1.0 - std::pow(2.0 / static_cast<double>(n_), 1.0 - theta_)) /
               (1.0 - zeta2 / zeta_n_);
    }

    std::size_t operator()(std::mt19937_64& rng) const {
        const double u = unit_uniform(rng);
        const double uz = u * zeta_n_;
        if (uz < 1.0) {
            return 0;
        }
        if (uz < 1.0 + std::pow(0.5, theta_)) {
            return 1;
        }
        const double rank = static_cast<double>(n_) *
                            std::pow(eta_ * u - eta_ + 1.0, alpha_);
        std::size_t index = static_cast<std::size_t>(rank);
        return std::min(index, n_ - 1);
    }

private:
    static double zeta(std::size_t n, double theta) {
        double sum = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            sum += 1.0 / std::pow(static_cast<double>(i), theta);
        }
        return sum;
    }

    std::size_t n_;
    double theta_;
    double zeta_n_ = 0.0;
    double alpha_ = 0.0;
    double eta_ = 0.0;
};

}  // namespace

TransactionDatabase generate_synthetic(std::uint64_t transaction_count,
                                       std::uint64_t item_universe,
                                       double mean_basket,
                                       std::uint64_t seed) {
    if (item_universe == 0) {
        throw std::invalid_argument("item universe must be positive");
    }
    if (!(mean_basket > 0.0)) {
        throw std::invalid_argument("mean basket size must be positive");
    }
    if (mean_basket > static_cast<double>(item_universe)) {
        throw std::invalid_argument("mean basket size cannot exceed the item universe");
    }

    // Intern the whole universe up front so item ids are 0..N-1 with labels
    // "1".."N" regardless of which items the sampler happens to emit.
    ItemDictionary dictionary;
    for (std::uint64_t i = 1; i <= item_universe; ++i) {
        dictionary.intern(std::to_string(i));
    }

    std::mt19937_64 rng(seed);
    const std::size_t universe = static_cast<std::size_t>(item_universe);
    const ZipfSampler zipf(universe, 0.99);

    std::vector<Itemset> baskets;
    baskets.reserve(static_cast<std::size_t>(transaction_count));
    std::vector<bool> seen(universe, false);
    for (std::uint64_t t = 0; t < transaction_count; ++t) {
        const std::size_t size = sample_basket_size(rng, mean_basket, universe);
        Itemset items;
        items.reserve(size);
        std::fill(seen.begin(), seen.end(), false);
        // Rejection-sample distinct items; if the sampler keeps hitting the
        // same popular ranks, fall back to filling with the smallest unused
        // ids so the basket size stays deterministic.
        std::size_t attempts = 0;
        const std::size_t max_attempts = 16 * size + 64;
        while (items.size() < size && attempts < max_attempts) {
            ++attempts;
            const std::size_t pick = zipf(rng);
            if (!seen[pick]) {
                seen[pick] = true;
                items.push_back(static_cast<ItemId>(pick));
            }
        }
        for (std::size_t fill = 0; items.size() < size; ++fill) {
            if (!seen[fill]) {
                seen[fill] = true;
                items.push_back(static_cast<ItemId>(fill));
            }
        }
        baskets.push_back(std::move(items));
    }
    return TransactionDatabase::build(std::move(baskets), std::move(dictionary));
}

}  // namespace fim
