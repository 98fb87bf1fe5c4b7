#pragma once

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rough/errors.hpp"

namespace rough {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;
using Bitset = boost::dynamic_bitset<>;

// Finite ordered set of distinct element labels. Immutable once built; every
// other type holds one by shared pointer and works with dense indices.
class Universe {
public:
    // Throws empty_universe / duplicate_label.
    static UniversePtr make(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t index) const { return labels_[index]; }
    std::optional<std::size_t> index_of(std::string_view label) const;

private:
    explicit Universe(std::vector<std::string> labels);

    std::vector<std::string> labels_;
    std::unordered_map<std::string_view, std::size_t> index_; // views into labels_
};

// True when both handles may interoperate: identical object, or identical
// label sequence (two parses of the same document).
bool same_universe(const UniversePtr& a, const UniversePtr& b);

// Membership bitmap over a universe. All set operations require operands over
// the same universe and throw universe_mismatch otherwise.
class Subset {
public:
    Subset(UniversePtr universe, Bitset bits);

    static Subset empty(UniversePtr universe);
    static Subset full(UniversePtr universe);
    // Throws unknown_label.
    static Subset of_labels(UniversePtr universe, std::span<const std::string> labels);
    static Subset of_indices(UniversePtr universe, std::span<const std::size_t> indices);

    const UniversePtr& universe() const { return universe_; }
    const Bitset& bits() const { return bits_; }

    std::size_t count() const { return bits_.count(); }
    bool none() const { return bits_.none(); }
    bool contains(std::size_t index) const { return bits_.test(index); }

    Subset operator|(const Subset& other) const;
    Subset operator&(const Subset& other) const;
    Subset operator-(const Subset& other) const;
    Subset operator~() const;
    bool is_subset_of(const Subset& other) const;

    friend bool operator==(const Subset& a, const Subset& b);
    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

    // Ascending universe order.
    std::vector<std::size_t> indices() const;
    std::vector<std::string> labels() const;

private:
    UniversePtr universe_;
    Bitset bits_;
};

// Equivalence-class decomposition of a universe: non-empty blocks, pairwise
// disjoint, jointly covering. Block order is the construction order; members
// are kept in ascending universe order.
class Partition {
public:
    // Throws unknown_label / not_disjoint / empty_block / not_covering.
    static Partition make(UniversePtr universe, const std::vector<std::vector<std::string>>& blocks);
    static Partition of_index_blocks(UniversePtr universe, std::vector<std::vector<std::size_t>> blocks);

    const UniversePtr& universe() const { return universe_; }
    std::size_t block_count() const { return members_.size(); }
    std::size_t block_size(std::size_t block) const { return members_[block].size(); }
    const std::vector<std::size_t>& members(std::size_t block) const { return members_[block]; }
    std::size_t block_of(std::size_t element) const { return block_of_[element]; }
    const Subset& block(std::size_t block) const { return block_subsets_[block]; }

private:
    Partition(UniversePtr universe, std::vector<std::vector<std::size_t>> members);

    UniversePtr universe_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::size_t> block_of_;
    std::vector<Subset> block_subsets_;
};

} // namespace rough
