#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rough/core.hpp"

namespace rough {

// Serializable instance: explicit universe, blocks and target, all by label.
struct InstanceSpec {
    std::vector<std::string> universe;
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> target;
    std::optional<std::string> name;

    bool operator==(const InstanceSpec&) const = default;
};

// JSON document with keys "universe", "blocks", "target" and optional "name";
// unknown keys are rejected. Malformed documents throw ParseError; documents
// that parse but violate a partition/subset invariant throw the corresponding
// validation Error with the offending section named in the message.
InstanceSpec parse_instance(std::string_view text);

// Inverse of parse_instance: parse(emit(spec)) == spec.
std::string emit_instance(const InstanceSpec& spec);

struct Instance {
    UniversePtr universe;
    Partition partition;
    Subset target;
    std::optional<std::string> name;
};

Instance realize(const InstanceSpec& spec);

// Rectangular attribute-value table: first row is the header, first column
// the object label. Cells are exact text; no numeric coercion anywhere.
struct InfoTable {
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<std::vector<std::string>> rows; // rows[i][j] = value of attributes[j] for objects[i]
    std::optional<std::string> decision;        // conventional decision column, if the caller marked one
};

// CSV, comma-separated, UTF-8, no quoting; empty cells count as missing and
// are rejected. Throws ParseError / Error(ragged_row | duplicate_object |
// empty_table).
InfoTable parse_table(std::string_view text);

UniversePtr table_universe(const InfoTable& table);

// Groups objects with identical value tuples on the chosen attributes; block
// order is first occurrence. Throws unknown_attribute / empty_attribute_set.
Partition indiscernibility(const InfoTable& table, std::span<const std::string> attributes);

// Objects whose decision cell equals `value` exactly. An absent value yields
// the empty subset, not an error.
Subset target_from_decision(const InfoTable& table, const std::string& attribute, const std::string& value);

} // namespace rough
