#include "fim/database.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace fim {

ItemId ItemDictionary::intern(std::string label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) {
        return it->second;
    }
    const ItemId id = static_cast<ItemId>(labels_.size());
    ids_.emplace(label, id);
    labels_.push_back(std::move(label));
    return id;
}

std::optional<ItemId> ItemDictionary::find(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) {
        return std::nullopt;
    }
    return it->second;
}

TransactionDatabase TransactionDatabase::build(std::vector<Itemset> baskets,
                                               ItemDictionary dictionary,
                                               std::vector<std::string> tid_labels) {
    TransactionDatabase db;
    db.dictionary_ = std::move(dictionary);
    db.vertical_.resize(db.dictionary_.size());
    db.transactions_.reserve(baskets.size());
    for (std::size_t i = 0; i < baskets.size(); ++i) {
        Itemset items = std::move(baskets[i]);
        canonicalize(items);
        for (ItemId item : items) {
            if (item >= db.vertical_.size()) {
                throw std::invalid_argument("basket item id outside dictionary");
            }
            db.vertical_[item].push_back(static_cast<Tid>(i));
        }
        db.occurrences_ += items.size();
        db.max_transaction_size_ = std::max(db.max_transaction_size_, items.size());
        db.transactions_.push_back(Transaction{static_cast<Tid>(i), std::move(items)});
    }
    db.tid_labels_ = std::move(tid_labels);
    return db;
}

const TidList& TransactionDatabase::tid_list(ItemId item) const {
    if (item >= vertical_.size()) {
        throw std::out_of_range("unknown item id " + std::to_string(item));
    }
    return vertical_[item];
}

std::string TransactionDatabase::tid_label(Tid tid) const {
    if (tid < tid_labels_.size()) {
        return tid_labels_[tid];
    }
    return "T" + std::to_string(tid + 1);
}

namespace {

bool parse_unsigned(std::string_view token, std::uint64_t& value) {
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last && !token.empty();
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

}  // namespace

TransactionDatabase parse_dat(std::istream& in) {
    std::vector<Itemset> baskets;
    ItemDictionary dictionary;
    std::string line;
    std::string token;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        std::istringstream tokens(line);
        Itemset items;
        while (tokens >> token) {
            std::uint64_t value = 0;
            if (!parse_unsigned(token, value)) {
                throw ParseError("line " + std::to_string(line_no) + ": item label '" +
                                 token + "' is not a non-negative integer");
            }
            items.push_back(dictionary.intern(std::to_string(value)));
        }
        if (!items.empty()) {
            baskets.push_back(std::move(items));
        }
    }
    return TransactionDatabase::build(std::move(baskets), std::move(dictionary));
}

TransactionDatabase parse_dat(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dat(in);
}

TransactionDatabase parse_basket_csv(std::istream& in) {
    std::vector<Itemset> baskets;
    std::vector<std::string> tid_labels;
    std::unordered_map<std::string, std::size_t> tid_index;
    ItemDictionary dictionary;
    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        if (first_row) {
            first_row = false;
            if (line == "tid,item") {
                continue;
            }
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw ParseError("row " + std::to_string(line_no) +
                             ": expected exactly 2 comma-separated fields");
        }
        std::string tid_field = line.substr(0, comma);
        std::string item_field = line.substr(comma + 1);
        auto [it, inserted] = tid_index.try_emplace(tid_field, baskets.size());
        if (inserted) {
            baskets.emplace_back();
            tid_labels.push_back(std::move(tid_field));
        }
        baskets[it->second].push_back(dictionary.intern(std::move(item_field)));
    }
    return TransactionDatabase::build(std::move(baskets), std::move(dictionary),
                                      std::move(tid_labels));
}

TransactionDatabase parse_basket_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_basket_csv(in);
}

void write_dat(const TransactionDatabase& db, std::ostream& out) {
    for (const Transaction& txn : db.transactions()) {
        for (std::size_t i = 0; i < txn.items.size(); ++i) {
            if (i != 0) {
                out << ' ';
            }
            out << db.dictionary().label(txn.items[i]);
        }
        out << '\n';
    }
}

}  // namespace fim
