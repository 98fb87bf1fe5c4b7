#include "rough/ingestion.hpp"

#include <json.hpp>

#include <map>
#include <unordered_set>

namespace rough {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> string_array(const json& value, const std::string& where) {
    if (!value.is_array())
        throw ParseError("expected an array of strings", where);
    std::vector<std::string> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_string())
            throw ParseError("expected a string", where);
        out.push_back(item.get<std::string>());
    }
    return out;
}

template <typename Fn>
auto with_context(const std::string& where, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw Error(e.code(), where + ": " + e.message());
    }
}

} // namespace

InstanceSpec parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object())
        throw ParseError("instance document must be a JSON object");

    static const std::unordered_set<std::string> known = {"universe", "blocks", "target", "name"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known.count(key))
            throw ParseError("unknown key '" + key + "'");
    }
    for (const char* required : {"universe", "blocks", "target"})
        if (!doc.contains(required))
            throw ParseError(std::string("missing key '") + required + "'");

    InstanceSpec spec;
    spec.universe = string_array(doc["universe"], "universe");
    if (!doc["blocks"].is_array())
        throw ParseError("expected an array of arrays", "blocks");
    for (std::size_t b = 0; b < doc["blocks"].size(); ++b)
        spec.blocks.push_back(string_array(doc["blocks"][b], "blocks[" + std::to_string(b) + "]"));
    spec.target = string_array(doc["target"], "target");
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError("expected a string", "name");
        spec.name = doc["name"].get<std::string>();
    }

    // Pre-check every domain invariant so loading errors point at the source.
    realize(spec);
    return spec;
}

std::string emit_instance(const InstanceSpec& spec) {
    ordered_json doc;
    if (spec.name) doc["name"] = *spec.name;
    doc["universe"] = spec.universe;
    doc["blocks"] = spec.blocks;
    doc["target"] = spec.target;
    return doc.dump(2) + "\n";
}

Instance realize(const InstanceSpec& spec) {
    UniversePtr universe = with_context("universe", [&] { return Universe::make(spec.universe); });
    Partition partition =
        with_context("blocks", [&] { return Partition::make(universe, spec.blocks); });
    Subset target = with_context("target", [&] {
        return Subset::of_labels(universe, std::span<const std::string>(spec.target));
    });
    return Instance{std::move(universe), std::move(partition), std::move(target), spec.name};
}

// ---------------------------------------------------------------------------
// Decision tables
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.emplace_back(line.substr(start));
            break;
        }
        cells.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

} // namespace

InfoTable parse_table(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    if (lines.empty())
        throw Error(errc::empty_table, "document has no header row");

    const std::vector<std::string> header = split_csv_line(lines[0]);
    for (const std::string& cell : header)
        if (cell.empty())
            throw Error(errc::ragged_row, "row 1: empty header cell");
    std::unordered_set<std::string> attr_names;
    for (std::size_t c = 1; c < header.size(); ++c)
        if (!attr_names.insert(header[c]).second)
            throw ParseError("duplicate column '" + header[c] + "'");

    InfoTable table;
    table.attributes.assign(header.begin() + 1, header.end());

    std::unordered_set<std::string> seen_objects;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        std::vector<std::string> cells = split_csv_line(lines[r]);
        const std::string row_label = "row " + std::to_string(r + 1);
        if (cells.size() != header.size())
            throw Error(errc::ragged_row, row_label + ": expected " + std::to_string(header.size()) +
                                              " cells, found " + std::to_string(cells.size()));
        for (const std::string& cell : cells)
            if (cell.empty())
                throw Error(errc::ragged_row, row_label + ": missing value");
        if (!seen_objects.insert(cells[0]).second)
            throw Error(errc::duplicate_object, "object '" + cells[0] + "' appears twice");
        table.objects.push_back(cells[0]);
        table.rows.emplace_back(cells.begin() + 1, cells.end());
    }
    if (table.objects.empty())
        throw Error(errc::empty_table, "document has a header but no rows");
    return table;
}

UniversePtr table_universe(const InfoTable& table) { return Universe::make(table.objects); }

namespace {

std::size_t column_index(const InfoTable& table, const std::string& attribute) {
    for (std::size_t c = 0; c < table.attributes.size(); ++c)
        if (table.attributes[c] == attribute) return c;
    throw Error(errc::unknown_attribute, "attribute '" + attribute + "' is not in the table");
}

} // namespace

Partition indiscernibility(const InfoTable& table, std::span<const std::string> attributes) {
    if (attributes.empty())
        throw Error(errc::empty_attribute_set, "at least one attribute is required");
    std::vector<std::size_t> columns;
    columns.reserve(attributes.size());
    for (const std::string& a : attributes) columns.push_back(column_index(table, a));

    UniversePtr universe = table_universe(table);
    std::map<std::vector<std::string_view>, std::size_t> block_of_tuple;
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        std::vector<std::string_view> tuple;
        tuple.reserve(columns.size());
        for (std::size_t c : columns) tuple.push_back(table.rows[r][c]);
        auto [it, inserted] = block_of_tuple.emplace(std::move(tuple), blocks.size());
        if (inserted) blocks.emplace_back();
        blocks[it->second].push_back(r);
    }
    return Partition::of_index_blocks(std::move(universe), std::move(blocks));
}

Subset target_from_decision(const InfoTable& table, const std::string& attribute,
                            const std::string& value) {
    const std::size_t column = column_index(table, attribute);
    UniversePtr universe = table_universe(table);
    Bitset bits(universe->size());
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        if (table.rows[r][column] == value) bits.set(r);
    return Subset(std::move(universe), std::move(bits));
}

} // namespace rough
