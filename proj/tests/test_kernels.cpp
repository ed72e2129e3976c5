#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fim/candidates.hpp"
#include "fim/kernels.hpp"
#include "support/test_util.hpp"

using namespace fim;

namespace {

const std::vector<Itemset> kC2 = {{0, 1}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {3, 4}};

std::vector<const TidList*> l1_tid_ptrs(const TransactionDatabase& db,
                                        const std::vector<Itemset>& l1) {
    std::vector<const TidList*> ptrs;
    for (const Itemset& s : l1) {
        ptrs.push_back(&db.tid_list(s.front()));
    }
    return ptrs;
}

}  // namespace

TEST_CASE("intersect_counted merges sorted lists and tallies comparisons") {
    std::uint64_t comparisons = 0;
    CHECK(intersect_counted({0, 3, 7, 8}, {1, 2, 3}, comparisons) == TidList{3});
    CHECK(comparisons == 4);
    comparisons = 0;
    CHECK(intersect_counted({1, 2}, {3, 4}, comparisons) == TidList{});
    CHECK(comparisons == 2);
    comparisons = 0;
    CHECK(intersect_counted({}, {1, 2, 3}, comparisons) == TidList{});
    CHECK(comparisons == 0);
    comparisons = 0;
    CHECK(intersect_counted({5, 6}, {5, 6}, comparisons) == TidList{5, 6});
    CHECK(comparisons == 2);
}

TEST_CASE("full scan counts every candidate against every transaction") {
    const TransactionDatabase db = testutil::table1();
    std::vector<std::uint64_t> counts;
    const std::uint64_t scans = kernels::count_full_scan_serial(db, kC2, counts);
    CHECK(scans == 54);  // 6 candidates x 9 transactions
    CHECK(counts == std::vector<std::uint64_t>{4, 1, 4, 3, 3, 0});
}

TEST_CASE("min-item scan visits only the least-frequent member's tid list") {
    const TransactionDatabase db = testutil::table1();
    std::vector<std::uint64_t> counts;
    const std::uint64_t scans = kernels::count_min_item_scan_serial(db, kC2, counts);
    CHECK(scans == 25);  // 6+3+5+3+5+3
    CHECK(counts == std::vector<std::uint64_t>{4, 1, 4, 3, 3, 0});
}

TEST_CASE("min_support_item picks the shortest list, ties to the smaller id") {
    const TransactionDatabase db = testutil::table1();
    CHECK(kernels::min_support_item(db, {0, 1}) == 0);  // 6 < 7
    CHECK(kernels::min_support_item(db, {1, 3}) == 3);  // 3 < 7
    CHECK(kernels::min_support_item(db, {0, 1, 4}) == 4);
    // The filtered count for candidate {items 1,2} examines 6 transactions.
    CHECK(db.tid_list(kernels::min_support_item(db, {0, 1})).size() == 6);
    CHECK_THROWS_AS(kernels::min_support_item(db, {}), std::invalid_argument);

    const TransactionDatabase tie = parse_dat("1 2\n1 2\n");
    CHECK(kernels::min_support_item(tie, {0, 1}) == 0);
}

TEST_CASE("tid-list intersection derives level-2 lists with zero scans") {
    const TransactionDatabase db = testutil::table1();
    const std::vector<Itemset> l1 = {{0}, {1}, {3}, {4}};
    std::vector<TidList> tids;
    const std::uint64_t comparisons =
        kernels::intersect_tidlists_serial(db, kC2, l1, l1_tid_ptrs(db, l1), tids);
    CHECK(comparisons == 36);
    REQUIRE(tids.size() == 6);
    CHECK(tids[0] == TidList{0, 3, 7, 8});  // items 1,2 -> T1,T4,T8,T9
    CHECK(tids[1] == TidList{3});
    CHECK(tids[2] == TidList{4, 6, 7, 8});  // items 1,3 -> T5,T7,T8,T9
    CHECK(tids[3] == TidList{1, 2, 3});     // items 2,4 -> T2,T3,T4
    CHECK(tids[4] == TidList{5, 7, 8});     // items 2,3 -> T6,T8,T9
    CHECK(tids[5] == TidList{});
}

TEST_CASE("intersection falls back to an earlier parent when the prefix is absent") {
    const TransactionDatabase db = testutil::table1();
    // {0,3,4} has prefix {0,3} (support 1) absent from the kept level; its
    // parent must resolve to {0,4} by removing the middle item instead.
    const std::vector<Itemset> kept = {{0, 1}, {0, 4}, {1, 3}, {1, 4}};
    std::vector<TidList> kept_tids;
    std::uint64_t ignore = 0;
    for (const Itemset& s : kept) {
        kept_tids.push_back(
            intersect_counted(db.tid_list(s[0]), db.tid_list(s[1]), ignore));
    }
    std::vector<const TidList*> kept_ptrs;
    for (const TidList& t : kept_tids) {
        kept_ptrs.push_back(&t);
    }
    std::vector<TidList> tids;
    const std::uint64_t comparisons =
        kernels::intersect_tidlists_serial(db, {{0, 3, 4}}, kept, kept_ptrs, tids);
    // Parent {0,4} has tids {4,6,7,8}; removed item 3 has {1,2,3}: the merge
    // spends 3 comparisons skipping past the shorter list.
    CHECK(comparisons == 3);
    CHECK(tids[0] == TidList{});  // labels 1,4,3 never co-occur
}

TEST_CASE("kernels accept empty candidate lists") {
    const TransactionDatabase db = testutil::table1();
    std::vector<std::uint64_t> counts{99};
    CHECK(kernels::count_full_scan_serial(db, {}, counts) == 0);
    CHECK(counts.empty());
    counts = {99};
    CHECK(kernels::count_min_item_scan_serial(db, {}, counts) == 0);
    CHECK(counts.empty());
    std::vector<TidList> tids{{1, 2}};
    CHECK(kernels::intersect_tidlists_serial(db, {}, {}, {}, tids) == 0);
    CHECK(tids.empty());
}

TEST_CASE("parallel kernels match the serial reference") {
    std::mt19937_64 rng(303);
    for (int iter = 0; iter < 25; ++iter) {
        const TransactionDatabase db = testutil::random_db(rng);
        // Real L1 itemsets at a random support.
        const std::uint64_t s = 1 + rng() % 5;
        std::vector<Itemset> l1;
        std::vector<ItemId> freq;
        for (ItemId i = 0; i < db.item_count(); ++i) {
            if (db.tid_list(i).size() >= s) {
                l1.push_back({i});
                freq.push_back(i);
            }
        }
        const CandidateSet c2 = join(l1, freq, JoinStrategy{});

        std::vector<std::uint64_t> serial_counts;
        std::vector<std::uint64_t> omp_counts;
        const std::uint64_t serial_scans =
            kernels::count_full_scan_serial(db, c2.itemsets, serial_counts);
        for (int threads : {2, 4}) {
            const std::uint64_t omp_scans =
                kernels::count_full_scan_omp(db, c2.itemsets, omp_counts, threads);
            CHECK(omp_scans == serial_scans);
            CHECK(omp_counts == serial_counts);
        }

        const std::uint64_t serial_min =
            kernels::count_min_item_scan_serial(db, c2.itemsets, serial_counts);
        for (int threads : {2, 4}) {
            const std::uint64_t omp_min =
                kernels::count_min_item_scan_omp(db, c2.itemsets, omp_counts, threads);
            CHECK(omp_min == serial_min);
            CHECK(omp_counts == serial_counts);
        }

        std::vector<TidList> serial_tids;
        std::vector<TidList> omp_tids;
        const std::uint64_t serial_cmp = kernels::intersect_tidlists_serial(
            db, c2.itemsets, l1, l1_tid_ptrs(db, l1), serial_tids);
        for (int threads : {2, 4}) {
            const std::uint64_t omp_cmp = kernels::intersect_tidlists_omp(
                db, c2.itemsets, l1, l1_tid_ptrs(db, l1), omp_tids, threads);
            CHECK(omp_cmp == serial_cmp);
            CHECK(omp_tids == serial_tids);
        }

        // Full-scan and min-item counting agree; intersection sizes agree.
        kernels::count_full_scan_serial(db, c2.itemsets, serial_counts);
        kernels::count_min_item_scan_serial(db, c2.itemsets, omp_counts);
        CHECK(serial_counts == omp_counts);
        for (std::size_t i = 0; i < serial_tids.size(); ++i) {
            CHECK(serial_tids[i].size() == serial_counts[i]);
        }
    }
}

TEST_CASE("dispatchers route threads<=1 to the serial path") {
    const TransactionDatabase db = testutil::table1();
    std::vector<std::uint64_t> counts;
    CHECK(kernels::count_full_scan(db, kC2, counts, 1) == 54);
    CHECK(kernels::count_full_scan(db, kC2, counts, 4) == 54);
    CHECK(kernels::count_min_item_scan(db, kC2, counts, 1) == 25);
    CHECK(kernels::count_min_item_scan(db, kC2, counts, 4) == 25);
}
