#include "rough/core.hpp"

#include <algorithm>

namespace rough {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
        index_.emplace(labels_[i], i);
}

UniversePtr Universe::make(std::vector<std::string> labels) {
    if (labels.empty())
        throw Error(errc::empty_universe, "a universe needs at least one element");
    auto u = UniversePtr(new Universe(std::move(labels)));
    if (u->index_.size() != u->labels_.size()) {
        // Find the first repeated label for the message.
        std::unordered_map<std::string_view, std::size_t> seen;
        for (const auto& l : u->labels_) {
            if (!seen.emplace(l, 0).second)
                throw Error(errc::duplicate_label, "label '" + l + "' appears twice");
        }
    }
    return u;
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->labels() == b->labels();
}

namespace {

void require_same(const UniversePtr& a, const UniversePtr& b) {
    if (!same_universe(a, b))
        throw Error(errc::universe_mismatch, "operands live in different universes");
}

} // namespace

Subset::Subset(UniversePtr universe, Bitset bits) : universe_(std::move(universe)), bits_(std::move(bits)) {
    if (bits_.size() != universe_->size())
        throw Error(errc::universe_mismatch, "bitmap length does not match universe size");
}

Subset Subset::empty(UniversePtr universe) {
    Bitset bits(universe->size());
    return Subset(std::move(universe), std::move(bits));
}

Subset Subset::full(UniversePtr universe) {
    Bitset bits(universe->size());
    bits.set();
    return Subset(std::move(universe), std::move(bits));
}

Subset Subset::of_labels(UniversePtr universe, std::span<const std::string> labels) {
    Bitset bits(universe->size());
    for (const auto& label : labels) {
        auto idx = universe->index_of(label);
        if (!idx)
            throw Error(errc::unknown_label, "label '" + label + "' is not in the universe");
        bits.set(*idx);
    }
    return Subset(std::move(universe), std::move(bits));
}

Subset Subset::of_indices(UniversePtr universe, std::span<const std::size_t> indices) {
    Bitset bits(universe->size());
    for (std::size_t i : indices) bits.set(i);
    return Subset(std::move(universe), std::move(bits));
}

Subset Subset::operator|(const Subset& other) const {
    require_same(universe_, other.universe_);
    return Subset(universe_, bits_ | other.bits_);
}

Subset Subset::operator&(const Subset& other) const {
    require_same(universe_, other.universe_);
    return Subset(universe_, bits_ & other.bits_);
}

Subset Subset::operator-(const Subset& other) const {
    require_same(universe_, other.universe_);
    return Subset(universe_, bits_ - other.bits_);
}

Subset Subset::operator~() const { return Subset(universe_, ~bits_); }

bool Subset::is_subset_of(const Subset& other) const {
    require_same(universe_, other.universe_);
    return bits_.is_subset_of(other.bits_);
}

bool operator==(const Subset& a, const Subset& b) {
    require_same(a.universe_, b.universe_);
    return a.bits_ == b.bits_;
}

std::vector<std::size_t> Subset::indices() const {
    std::vector<std::size_t> out;
    out.reserve(bits_.count());
    for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i))
        out.push_back(i);
    return out;
}

std::vector<std::string> Subset::labels() const {
    std::vector<std::string> out;
    out.reserve(bits_.count());
    for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i))
        out.push_back(universe_->label(i));
    return out;
}

Partition::Partition(UniversePtr universe, std::vector<std::vector<std::size_t>> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
    block_of_.assign(universe_->size(), 0);
    block_subsets_.reserve(members_.size());
    for (std::size_t b = 0; b < members_.size(); ++b) {
        Bitset bits(universe_->size());
        for (std::size_t e : members_[b]) {
            block_of_[e] = b;
            bits.set(e);
        }
        block_subsets_.emplace_back(universe_, std::move(bits));
    }
}

Partition Partition::of_index_blocks(UniversePtr universe, std::vector<std::vector<std::size_t>> blocks) {
    const std::size_t n = universe->size();
    std::vector<char> assigned(n, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw Error(errc::empty_block, "block " + std::to_string(b + 1) + " is empty");
        for (std::size_t e : blocks[b]) {
            if (e >= n)
                throw Error(errc::unknown_label, "element index " + std::to_string(e) + " out of range");
            if (assigned[e])
                throw Error(errc::not_disjoint, "element '" + universe->label(e) + "' appears in two blocks");
            assigned[e] = 1;
        }
        std::sort(blocks[b].begin(), blocks[b].end());
    }
    for (std::size_t e = 0; e < n; ++e)
        if (!assigned[e])
            throw Error(errc::not_covering, "element '" + universe->label(e) + "' belongs to no block");
    return Partition(std::move(universe), std::move(blocks));
}

Partition Partition::make(UniversePtr universe, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::vector<std::size_t>> index_blocks;
    index_blocks.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<std::size_t> ib;
        ib.reserve(blocks[b].size());
        for (const auto& label : blocks[b]) {
            auto idx = universe->index_of(label);
            if (!idx)
                throw Error(errc::unknown_label, "label '" + label + "' is not in the universe");
            ib.push_back(*idx);
        }
        index_blocks.push_back(std::move(ib));
    }
    return of_index_blocks(std::move(universe), std::move(index_blocks));
}

} // namespace rough
