#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fim/database.hpp"
#include "fim/synthetic.hpp"
#include "support/test_util.hpp"

using namespace fim;

TEST_CASE("item dictionary interns labels densely in first-seen order") {
    ItemDictionary dict;
    CHECK(dict.size() == 0);
    CHECK(dict.intern("apple") == 0);
    CHECK(dict.intern("pear") == 1);
    CHECK(dict.intern("apple") == 0);
    CHECK(dict.size() == 2);
    CHECK(dict.label(0) == "apple");
    CHECK(dict.label(1) == "pear");
    REQUIRE(dict.find("pear").has_value());
    CHECK(*dict.find("pear") == 1);
    CHECK_FALSE(dict.find("plum").has_value());
    CHECK_THROWS_AS((void)dict.label(2), std::out_of_range);
}

TEST_CASE("parse_dat transcribes simple input") {
    const TransactionDatabase db = parse_dat("1 2 5\n2 4\n");
    CHECK(db.transaction_count() == 2);
    CHECK(db.item_count() == 4);
    REQUIRE(db.dictionary().find("4").has_value());
    CHECK(db.tid_list(*db.dictionary().find("4")) == TidList{1});
}

TEST_CASE("parse_dat loads the worked example with first-seen ids") {
    const TransactionDatabase db = testutil::table1();
    CHECK(db.transaction_count() == 9);
    CHECK(db.item_count() == 5);
    CHECK(db.occurrence_count() == 23);
    CHECK(db.max_transaction_size() == 4);

    // First-seen id assignment follows reading order 1, 2, 5, 4, 3.
    CHECK(*db.dictionary().find("1") == 0);
    CHECK(*db.dictionary().find("2") == 1);
    CHECK(*db.dictionary().find("5") == 2);
    CHECK(*db.dictionary().find("4") == 3);
    CHECK(*db.dictionary().find("3") == 4);

    // Item frequencies 6, 7, 5, 3, 2 in label order 1..5.
    CHECK(db.tid_list(0).size() == 6);
    CHECK(db.tid_list(1).size() == 7);
    CHECK(db.tid_list(4).size() == 5);
    CHECK(db.tid_list(3).size() == 3);
    CHECK(db.tid_list(2).size() == 2);

    // Exact vertical lists (0-based tids).
    CHECK(db.tid_list(0) == TidList{0, 3, 4, 6, 7, 8});
    CHECK(db.tid_list(1) == TidList{0, 1, 2, 3, 5, 7, 8});
    CHECK(db.tid_list(2) == TidList{0, 7});
    CHECK(db.tid_list(3) == TidList{1, 2, 3});
    CHECK(db.tid_list(4) == TidList{4, 5, 6, 7, 8});

    CHECK(db.tid_label(0) == "T1");
    CHECK(db.tid_label(8) == "T9");
    CHECK_THROWS_AS((void)db.tid_list(5), std::out_of_range);
}

TEST_CASE("parse_dat tolerates whitespace runs, CRLF, and blank lines") {
    const TransactionDatabase db = parse_dat("  1   2 \r\n\n 3 1\r\n");
    CHECK(db.transaction_count() == 2);
    CHECK(db.item_count() == 3);
    CHECK(db.transactions()[0].items == Itemset{0, 1});
    CHECK(db.transactions()[1].items == Itemset{0, 2});
}

TEST_CASE("parse_dat canonicalizes numeric labels and collapses duplicates") {
    const TransactionDatabase db = parse_dat("007 7 8\n");
    CHECK(db.transaction_count() == 1);
    CHECK(db.item_count() == 2);  // 007 and 7 are the same item
    CHECK(db.dictionary().label(0) == "7");
    CHECK(db.transactions()[0].items == Itemset{0, 1});
}

TEST_CASE("parse_dat rejects non-integer tokens with the line number") {
    CHECK_THROWS_WITH_AS(parse_dat("1 x 2\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dat("1 2\n3 4 q\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_dat("-3\n"), ParseError);
    CHECK_THROWS_AS(parse_dat("1.5\n"), ParseError);
}

TEST_CASE("parse_dat on empty input yields an empty database") {
    const TransactionDatabase db = parse_dat("");
    CHECK(db.transaction_count() == 0);
    CHECK(db.item_count() == 0);
    CHECK(db.occurrence_count() == 0);
    CHECK(db.max_transaction_size() == 0);
}

TEST_CASE("parse_basket_csv groups rows by tid in first-appearance order") {
    const TransactionDatabase db = parse_basket_csv("T1,I1\nT1,I2\nT2,I2\n");
    CHECK(db.transaction_count() == 2);
    CHECK(db.item_count() == 2);
    CHECK(db.transactions()[0].items == Itemset{0, 1});
    CHECK(db.transactions()[1].items == Itemset{1});
    CHECK(db.tid_label(0) == "T1");
    CHECK(db.tid_label(1) == "T2");
}

TEST_CASE("parse_basket_csv handles interleaved tids and string labels") {
    const TransactionDatabase db = parse_basket_csv("x,apple\ny,pear\nx,plum\nx,apple\n");
    CHECK(db.transaction_count() == 2);
    CHECK(db.transactions()[0].items == Itemset{0, 2});  // apple, plum deduped
    CHECK(db.transactions()[1].items == Itemset{1});
    CHECK(db.dictionary().label(0) == "apple");
    CHECK(db.tid_label(0) == "x");
}

TEST_CASE("parse_basket_csv skips only an exact tid,item header") {
    const TransactionDatabase with_header = parse_basket_csv("tid,item\r\na,1\r\n");
    CHECK(with_header.transaction_count() == 1);
    // A data-looking first row is not a header.
    const TransactionDatabase no_header = parse_basket_csv("t1,apple\nt1,pear\n");
    CHECK(no_header.transaction_count() == 1);
    CHECK(no_header.item_count() == 2);
    // Header-only input is an empty database.
    const TransactionDatabase empty = parse_basket_csv("tid,item\n");
    CHECK(empty.transaction_count() == 0);
    CHECK(empty.item_count() == 0);
}

TEST_CASE("parse_basket_csv rejects rows without exactly two fields") {
    CHECK_THROWS_WITH_AS(parse_basket_csv("a,b,c\n"), doctest::Contains("row 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_basket_csv("a,1\nnocomma\n"), doctest::Contains("row 2"),
                         ParseError);
}

TEST_CASE("csv encoding of the worked example matches the dat encoding") {
    std::string csv = "tid,item\n";
    const char* rows[] = {"T1,1", "T1,2", "T1,5", "T2,2", "T2,4", "T3,2", "T3,4", "T4,1",
                          "T4,2", "T4,4", "T5,1", "T5,3", "T6,2", "T6,3", "T7,1", "T7,3",
                          "T8,1", "T8,2", "T8,3", "T8,5", "T9,1", "T9,2", "T9,3"};
    for (const char* row : rows) {
        csv += row;
        csv += '\n';
    }
    const TransactionDatabase from_csv = parse_basket_csv(csv);
    const TransactionDatabase from_dat = testutil::table1();
    REQUIRE(from_csv.transaction_count() == from_dat.transaction_count());
    REQUIRE(from_csv.item_count() == from_dat.item_count());
    for (std::size_t t = 0; t < from_dat.transaction_count(); ++t) {
        CHECK(from_csv.transactions()[t].items == from_dat.transactions()[t].items);
    }
    for (ItemId i = 0; i < from_dat.item_count(); ++i) {
        CHECK(from_csv.dictionary().label(i) == from_dat.dictionary().label(i));
        CHECK(from_csv.tid_list(i) == from_dat.tid_list(i));
    }
    CHECK(from_csv.tid_label(3) == "T4");
}

TEST_CASE("write_dat round-trips through parse_dat") {
    const TransactionDatabase db = testutil::table1();
    std::ostringstream out;
    write_dat(db, out);
    const TransactionDatabase again = parse_dat(out.str());
    REQUIRE(again.transaction_count() == db.transaction_count());
    REQUIRE(again.item_count() == db.item_count());
    for (std::size_t t = 0; t < db.transaction_count(); ++t) {
        CHECK(again.transactions()[t].items == db.transactions()[t].items);
    }
    for (ItemId i = 0; i < db.item_count(); ++i) {
        CHECK(again.dictionary().label(i) == db.dictionary().label(i));
        CHECK(again.tid_list(i) == db.tid_list(i));
    }
}

TEST_CASE("build collapses duplicates and tracks occurrence totals") {
    ItemDictionary dict;
    dict.intern("a");
    dict.intern("b");
    std::vector<Itemset> baskets = {{1, 0, 1}, {0}};
    const TransactionDatabase db = TransactionDatabase::build(std::move(baskets), std::move(dict));
    CHECK(db.transactions()[0].items == Itemset{0, 1});
    CHECK(db.occurrence_count() == 3);
    CHECK(db.max_transaction_size() == 2);
    CHECK(db.tid_list(0) == TidList{0, 1});
    CHECK(db.tid_list(1) == TidList{0});
    CHECK(db.tid_label(1) == "T2");  // no labels supplied: 1-based fallback
}

TEST_CASE("build rejects items outside the dictionary") {
    ItemDictionary dict;
    dict.intern("a");
    std::vector<Itemset> baskets = {{0, 1}};
    CHECK_THROWS_AS(TransactionDatabase::build(std::move(baskets), std::move(dict)),
                    std::invalid_argument);
}

TEST_CASE("vertical index inverts the horizontal store on random databases") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 50; ++iter) {
        const TransactionDatabase db = testutil::random_db(rng);
        // Rebuild the horizontal store from the vertical lists.
        std::vector<Itemset> rebuilt(db.transaction_count());
        std::size_t total = 0;
        for (ItemId i = 0; i < db.item_count(); ++i) {
            const TidList& tids = db.tid_list(i);
            CHECK(std::is_sorted(tids.begin(), tids.end()));
            for (std::size_t j = 1; j < tids.size(); ++j) {
                CHECK(tids[j - 1] < tids[j]);  // strictly ascending
            }
            for (Tid t : tids) {
                REQUIRE(t < db.transaction_count());
                rebuilt[t].push_back(i);
            }
            total += tids.size();
        }
        CHECK(total == db.occurrence_count());
        for (std::size_t t = 0; t < db.transaction_count(); ++t) {
            CHECK(rebuilt[t] == db.transactions()[t].items);
        }
        // tid_list length equals a direct horizontal count.
        for (ItemId i = 0; i < db.item_count(); ++i) {
            std::size_t count = 0;
            for (const Transaction& txn : db.transactions()) {
                count += std::binary_search(txn.items.begin(), txn.items.end(), i) ? 1 : 0;
            }
            CHECK(count == db.tid_list(i).size());
        }
    }
}

TEST_CASE("generate_synthetic rejects invalid bounds") {
    CHECK_THROWS_AS(generate_synthetic(10, 0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_synthetic(10, 5, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_synthetic(10, 5, -2.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_synthetic(10, 5, 6.0, 1), std::invalid_argument);
}

TEST_CASE("generate_synthetic zero transactions yields an empty database") {
    const TransactionDatabase db = generate_synthetic(0, 10, 3.0, 42);
    CHECK(db.transaction_count() == 0);
    CHECK(db.item_count() == 10);  // universe is interned up front
    CHECK(db.occurrence_count() == 0);
}

TEST_CASE("generate_synthetic is deterministic per seed") {
    const TransactionDatabase a = generate_synthetic(100, 20, 4.0, 42);
    const TransactionDatabase b = generate_synthetic(100, 20, 4.0, 42);
    std::ostringstream text_a;
    std::ostringstream text_b;
    write_dat(a, text_a);
    write_dat(b, text_b);
    CHECK(text_a.str() == text_b.str());
    const TransactionDatabase c = generate_synthetic(100, 20, 4.0, 43);
    std::ostringstream text_c;
    write_dat(c, text_c);
    CHECK(text_a.str() != text_c.str());
}

TEST_CASE("generate_synthetic respects structural bounds") {
    const TransactionDatabase db = generate_synthetic(1000, 50, 5.0, 7);
    CHECK(db.transaction_count() == 1000);
    CHECK(db.item_count() == 50);
    CHECK(db.occurrence_count() >= 1000);
    CHECK(db.occurrence_count() <= 50000);
    for (const Transaction& txn : db.transactions()) {
        CHECK(txn.items.size() >= 1);
        CHECK(txn.items.size() <= 50);
    }
    for (ItemId i = 0; i < db.item_count(); ++i) {
        CHECK(db.dictionary().label(i) == std::to_string(i + 1));
    }
    // Zipf skew: the most popular item should appear far more often than
    // the median one.
    CHECK(db.tid_list(0).size() > db.tid_list(25).size());
}

TEST_CASE("generate_synthetic parses back through the dat round trip") {
    const TransactionDatabase db = generate_synthetic(200, 30, 4.0, 9);
    std::ostringstream out;
    write_dat(db, out);
    const TransactionDatabase again = parse_dat(out.str());
    CHECK(again.transaction_count() == db.transaction_count());
    for (std::size_t t = 0; t < db.transaction_count(); ++t) {
        Itemset lhs;
        for (ItemId i : again.transactions()[t].items) {
            lhs.push_back(static_cast<ItemId>(std::stoul(again.dictionary().label(i))));
        }
        Itemset rhs;
        for (ItemId i : db.transactions()[t].items) {
            rhs.push_back(static_cast<ItemId>(std::stoul(db.dictionary().label(i))));
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
    }
}
