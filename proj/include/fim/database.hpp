#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fim/types.hpp"

namespace fim {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Maps external item labels to dense ids assigned in first-seen order.
class ItemDictionary {
public:
    ItemId intern(std::string label);
    std::optional<ItemId> find(const std::string& label) const;
    const std::string& label(ItemId id) const { return labels_.at(id); }
    std::size_t size() const { return labels_.size(); }

private:
    std::unordered_map<std::string, ItemId> ids_;
    std::vector<std::string> labels_;
};

struct Transaction {
    Tid tid = 0;
    Itemset items;  // sorted ascending, duplicate-free
};

// Immutable transactional database holding the horizontal store
// (tid -> itemset) together with its inverted vertical index
// (item -> tid list). Safe to share across threads once built.
class TransactionDatabase {
public:
    // Baskets need not be canonical; duplicates within a basket collapse.
    // Every item id must be covered by the dictionary. `tid_labels`, when
    // given, must align with `baskets`.
    static TransactionDatabase build(std::vector<Itemset> baskets,
                                     ItemDictionary dictionary,
                                     std::vector<std::string> tid_labels = {});

    const std::vector<Transaction>& transactions() const { return transactions_; }
    std::size_t transaction_count() const { return transactions_.size(); }
    std::size_t item_count() const { return vertical_.size(); }

    // Vertical lookup; never touches the horizontal store.
    const TidList& tid_list(ItemId item) const;

    const ItemDictionary& dictionary() const { return dictionary_; }

    // Display label: the label carried by the input (CSV) when present,
    // otherwise "T<k>" with k 1-based.
    std::string tid_label(Tid tid) const;

    std::size_t occurrence_count() const { return occurrences_; }
    std::size_t max_transaction_size() const { return max_transaction_size_; }

private:
    TransactionDatabase() = default;

    std::vector<Transaction> transactions_;
    std::vector<TidList> vertical_;
    ItemDictionary dictionary_;
    std::vector<std::string> tid_labels_;  // empty unless the input carried labels
    std::size_t occurrences_ = 0;
    std::size_t max_transaction_size_ = 0;
};

// FIMI-style .dat: one transaction per nonempty line, whitespace-separated
// non-negative integer item labels. Accepts CRLF and arbitrary whitespace
// runs; labels are canonicalized to their decimal form.
TransactionDatabase parse_dat(std::istream& in);
TransactionDatabase parse_dat(std::string_view text);

// Two-column `tid,item` rows with an optional exact `tid,item` header on
// the first line. Rows are grouped by tid in first-appearance order; item
// labels may be arbitrary strings.
TransactionDatabase parse_basket_csv(std::istream& in);
TransactionDatabase parse_basket_csv(std::string_view text);

// .dat encoding of the horizontal store: item labels joined by single
// spaces, LF line endings. Meaningful for databases whose labels are
// integers (anything `parse_dat` or the synthetic generator produced).
void write_dat(const TransactionDatabase& db, std::ostream& out);

}  // namespace fim
