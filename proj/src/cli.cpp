#include "rough/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "rough/approximation.hpp"
#include "rough/ingestion.hpp"
#include "rough/lattice.hpp"

namespace rough {

namespace {

using nlohmann::ordered_json;

enum class Format { text, json };

struct RunConfig {
    std::string command;
    std::string input_path;
    bool table_mode = false;
    std::string attrs;    // comma-separated attribute list (table mode)
    std::string decision; // "column=value" (table mode)
    std::string beta, gamma, grid;
    Format format = Format::text;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(errc::bad_argument, "cannot read input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

// "0.33" reads as 33/100 exactly. Decimal strings made of repeated 3s are a
// classic one-third mistranscription, so call it out once on the error stream.
void warn_if_decimal_thirds(const std::string& text, const Rational& value, std::ostream& err) {
    const std::size_t dot = text.find('.');
    if (dot == std::string::npos) return;
    const std::string frac = text.substr(dot + 1);
    if (frac.size() < 2) return;
    if (frac.find_first_not_of('3') != std::string::npos) return;
    err << "warning: '" << text << "' is read exactly as " << value.str()
        << ", which is not 1/3; write 1/3 for one-third\n";
}

Precision parse_precision(const std::string& text, std::ostream& err) {
    const Rational value = Rational::parse(text);
    warn_if_decimal_thirds(text, value, err);
    return Precision(value);
}

Instance load_instance(const RunConfig& cfg) {
    const std::string text = read_file(cfg.input_path);
    if (!cfg.table_mode)
        return realize(parse_instance(text));

    const InfoTable table = parse_table(text);
    const std::vector<std::string> attributes = split_list(cfg.attrs);
    const std::size_t eq = cfg.decision.find('=');
    if (eq == std::string::npos)
        throw Error(errc::bad_argument, "--decision expects column=value");
    const std::string column = cfg.decision.substr(0, eq);
    const std::string value = cfg.decision.substr(eq + 1);

    Partition partition = indiscernibility(table, attributes);
    Subset raw_target = target_from_decision(table, column, value);
    // Rebind the target onto the partition's universe object so the two share
    // a pointer, not just content.
    Subset target(partition.universe(), raw_target.bits());
    return Instance{partition.universe(), std::move(partition), std::move(target), std::nullopt};
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string block_name(std::size_t index) { return "E" + std::to_string(index + 1); }

std::vector<std::size_t> blocks_of(const Partition& partition, const Subset& region) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < partition.block_count(); ++b)
        if (partition.block(b).is_subset_of(region)) out.push_back(b);
    return out;
}

std::string block_list_str(const std::vector<std::size_t>& blocks) {
    std::string out = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ", ";
        out += block_name(blocks[i]);
    }
    return out + "}";
}

std::string label_list_str(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += labels[i];
    }
    return out + "}";
}

ordered_json region_json(const Partition& partition, const Subset& region) {
    ordered_json j;
    ordered_json blocks = ordered_json::array();
    for (std::size_t b : blocks_of(partition, region)) blocks.push_back(b + 1);
    j["blocks"] = std::move(blocks);
    j["elements"] = region.labels();
    return j;
}

void render_instance_text(std::ostream& os, const RunConfig& cfg, const Instance& inst) {
    os << "instance: " << (inst.name ? *inst.name : cfg.input_path) << "\n";
    os << "universe: " << inst.universe->size() << " elements in " << inst.partition.block_count()
       << " blocks\n";
    os << "blocks:\n";
    for (std::size_t b = 0; b < inst.partition.block_count(); ++b)
        os << "  " << block_name(b) << " = " << label_list_str(inst.partition.block(b).labels())
           << "\n";
    os << "target: " << label_list_str(inst.target.labels()) << " (" << inst.target.count()
       << " elements)\n";
}

ordered_json instance_json(const RunConfig& cfg, const Instance& inst) {
    ordered_json j;
    if (inst.name) j["name"] = *inst.name;
    j["universe_size"] = inst.universe->size();
    ordered_json blocks = ordered_json::array();
    for (std::size_t b = 0; b < inst.partition.block_count(); ++b) {
        ordered_json blk;
        blk["name"] = block_name(b);
        blk["elements"] = inst.partition.block(b).labels();
        blocks.push_back(std::move(blk));
    }
    j["blocks"] = std::move(blocks);
    j["target"] = inst.target.labels();
    (void)cfg;
    return j;
}

ordered_json json_envelope(const RunConfig& cfg, ordered_json parameters, ordered_json result) {
    ordered_json doc;
    doc["command"] = cfg.command;
    doc["input"] = cfg.input_path;
    doc["parameters"] = std::move(parameters);
    doc["result"] = std::move(result);
    return doc;
}

void emit(std::ostream& out, Format format, const std::string& text, const ordered_json& doc) {
    if (format == Format::text)
        out << text;
    else
        out << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// regions
// ---------------------------------------------------------------------------

struct RegionsView {
    Subset lower, upper, positive, boundary, negative;
    Rational accuracy;
};

int cmd_regions(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Instance inst = load_instance(cfg);
    const Precision beta = parse_precision(cfg.beta, err);
    std::optional<Precision> gamma;
    if (!cfg.gamma.empty()) gamma = parse_precision(cfg.gamma, err);

    RegionsView view = [&] {
        if (gamma) {
            VprsveResult r = vprsve(inst.partition, inst.target, beta, *gamma);
            return RegionsView{r.lower, r.upper, r.positive, r.boundary, r.negative, r.accuracy};
        }
        VprsResult r = vprs(inst.partition, inst.target, beta);
        return RegionsView{r.lower, r.upper, r.positive, r.boundary, r.negative, r.accuracy};
    }();

    std::ostringstream text;
    render_instance_text(text, cfg, inst);
    text << "beta: " << beta.str() << "\n";
    if (gamma) text << "gamma: " << gamma->str() << "\n";
    text << "lower: " << block_list_str(blocks_of(inst.partition, view.lower)) << "\n";
    text << "upper: " << block_list_str(blocks_of(inst.partition, view.upper)) << "\n";
    text << "D:  " << block_list_str(blocks_of(inst.partition, view.positive)) << "\n";
    text << "BN: " << block_list_str(blocks_of(inst.partition, view.boundary)) << "\n";
    text << "N:  " << block_list_str(blocks_of(inst.partition, view.negative)) << "\n";
    text << "accuracy: " << view.accuracy.str() << "\n";

    ordered_json params;
    params["beta"] = beta.str();
    if (gamma) params["gamma"] = gamma->str();
    ordered_json result = instance_json(cfg, inst);
    result["lower"] = region_json(inst.partition, view.lower);
    result["upper"] = region_json(inst.partition, view.upper);
    result["D"] = region_json(inst.partition, view.positive);
    result["BN"] = region_json(inst.partition, view.boundary);
    result["N"] = region_json(inst.partition, view.negative);
    result["accuracy"] = view.accuracy.str();

    emit(out, cfg.format, text.str(), json_envelope(cfg, std::move(params), std::move(result)));
    return 0;
}

// ---------------------------------------------------------------------------
// thresholds
// ---------------------------------------------------------------------------

int cmd_thresholds(const RunConfig& cfg, std::ostream& out) {
    const Instance inst = load_instance(cfg);
    const ThresholdProfile profile = thresholds(inst.partition, inst.target);

    std::ostringstream text;
    render_instance_text(text, cfg, inst);
    text << "degrees:\n";
    for (std::size_t b = 0; b < profile.degrees.size(); ++b)
        text << "  " << block_name(b) << ": " << profile.degrees[b].str() << "\n";
    text << "critical:";
    if (profile.critical.empty()) {
        text << " (none)";
    } else {
        for (std::size_t i = 0; i < profile.critical.size(); ++i)
            text << (i ? ", " : " ") << profile.critical[i].str();
    }
    text << "\n";

    ordered_json result = instance_json(cfg, inst);
    ordered_json degrees = ordered_json::array();
    for (std::size_t b = 0; b < profile.degrees.size(); ++b) {
        ordered_json d;
        d["block"] = b + 1;
        d["degree"] = profile.degrees[b].str();
        degrees.push_back(std::move(d));
    }
    result["degrees"] = std::move(degrees);
    ordered_json critical = ordered_json::array();
    for (const Rational& c : profile.critical) critical.push_back(c.str());
    result["critical"] = std::move(critical);

    emit(out, cfg.format, text.str(), json_envelope(cfg, ordered_json::object(), std::move(result)));
    return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const Instance inst = load_instance(cfg);
    const std::vector<VprsResult> entries = sweep(inst.partition, inst.target);

    std::size_t beta_width = 4, acc_width = 8;
    for (const VprsResult& r : entries) {
        beta_width = std::max(beta_width, r.beta.str().size());
        acc_width = std::max(acc_width, r.accuracy.str().size());
    }

    std::ostringstream text;
    render_instance_text(text, cfg, inst);
    text << "sweep (" << entries.size() << " rows)\n";
    text << std::left << std::setw(static_cast<int>(beta_width) + 2) << "beta" << std::setw(9)
         << "|lower|" << std::setw(9) << "|upper|"
         << std::setw(static_cast<int>(acc_width) + 2) << "accuracy"
         << "BN\n";
    for (const VprsResult& r : entries) {
        text << std::left << std::setw(static_cast<int>(beta_width) + 2) << r.beta.str()
             << std::setw(9) << r.lower.count() << std::setw(9) << r.upper.count()
             << std::setw(static_cast<int>(acc_width) + 2) << r.accuracy.str()
             << block_list_str(blocks_of(inst.partition, r.boundary)) << "\n";
    }

    ordered_json result = instance_json(cfg, inst);
    ordered_json rows = ordered_json::array();
    for (const VprsResult& r : entries) {
        ordered_json row;
        row["beta"] = r.beta.str();
        row["lower_size"] = r.lower.count();
        row["upper_size"] = r.upper.count();
        row["accuracy"] = r.accuracy.str();
        ordered_json bn = ordered_json::array();
        for (std::size_t b : blocks_of(inst.partition, r.boundary)) bn.push_back(b + 1);
        row["boundary_blocks"] = std::move(bn);
        rows.push_back(std::move(row));
    }
    result["rows"] = std::move(rows);

    emit(out, cfg.format, text.str(), json_envelope(cfg, ordered_json::object(), std::move(result)));
    return 0;
}

// ---------------------------------------------------------------------------
// lattice
// ---------------------------------------------------------------------------

std::string element_str(const Partition& partition, const LatticeElement& e) {
    std::string s = "lower=" + block_list_str(blocks_of(partition, e.lower)) +
                    " upper=" + block_list_str(blocks_of(partition, e.upper));
    if (e.provenance)
        s += " from (" + e.provenance->first.str() + ", " + e.provenance->second.str() + ")";
    return s;
}

int cmd_lattice(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Instance inst = load_instance(cfg);

    BetaGrid grid = [&] {
        if (cfg.grid.empty()) return BetaGrid::full(inst.partition, inst.target);
        std::vector<Precision> values;
        for (const std::string& item : split_list(cfg.grid))
            values.push_back(parse_precision(item, err));
        return BetaGrid::of(std::move(values));
    }();

    const std::vector<LatticeElement> fam = family(inst.partition, inst.target, grid);
    const LawReport family_report = check_laws(fam);
    const std::vector<LatticeElement> closed = closure(fam);
    const LawReport report = check_laws(closed);

    // Cayley tables over the closure; every entry resolves by construction.
    std::map<std::pair<Bitset, Bitset>, std::size_t> index;
    for (std::size_t i = 0; i < closed.size(); ++i)
        index.emplace(std::pair{closed[i].lower.bits(), closed[i].upper.bits()}, i);
    const auto table_of = [&](bool meet_table) {
        std::vector<std::vector<std::size_t>> t(closed.size(), std::vector<std::size_t>(closed.size()));
        for (std::size_t i = 0; i < closed.size(); ++i)
            for (std::size_t j = 0; j < closed.size(); ++j) {
                const LatticeElement r =
                    meet_table ? meet(closed[i], closed[j]) : join(closed[i], closed[j]);
                t[i][j] = index.at({r.lower.bits(), r.upper.bits()});
            }
        return t;
    };
    const std::vector<std::vector<std::size_t>> join_table = table_of(false);
    const std::vector<std::vector<std::size_t>> meet_table = table_of(true);

    std::ostringstream text;
    render_instance_text(text, cfg, inst);
    text << "grid:";
    for (std::size_t i = 0; i < grid.size(); ++i)
        text << (i ? ", " : " ") << grid.values()[i].str();
    text << "\n";
    text << "family (" << fam.size() << " elements):\n";
    for (std::size_t i = 0; i < fam.size(); ++i)
        text << "  F" << i << ": " << element_str(inst.partition, fam[i]) << "\n";
    text << "family closed under join/meet: " << (family_report.closed ? "yes" : "no") << "\n";
    text << "closure (" << closed.size() << " elements):\n";
    for (std::size_t i = 0; i < closed.size(); ++i)
        text << "  L" << i << ": " << element_str(inst.partition, closed[i]) << "\n";

    const auto render_table = [&](const char* title, const std::vector<std::vector<std::size_t>>& t) {
        text << title << ":\n";
        for (std::size_t i = 0; i < t.size(); ++i) {
            text << "  L" << i << ":";
            for (std::size_t j = 0; j < t[i].size(); ++j) text << " L" << t[i][j];
            text << "\n";
        }
    };
    render_table("join table", join_table);
    render_table("meet table", meet_table);

    text << "laws (" << report.element_count << " elements, " << report.checked_triples
         << " triples):\n";
    for (const auto& [name, law] : report.laws) {
        text << "  " << name << ": " << (law.holds ? "PASS" : "FAIL");
        if (!law.holds && law.counterexample) {
            const auto& ce = *law.counterexample;
            text << " (" << ce.identity << " at L" << ce.operands[0] << ", L" << ce.operands[1]
                 << ", L" << ce.operands[2] << ")";
        }
        text << "\n";
    }

    ordered_json params;
    ordered_json grid_json = ordered_json::array();
    for (const Precision& p : grid.values()) grid_json.push_back(p.str());
    params["grid"] = grid_json;

    ordered_json result = instance_json(cfg, inst);
    result["grid"] = grid_json;
    ordered_json fam_json = ordered_json::array();
    for (const LatticeElement& e : fam) {
        ordered_json el;
        el["lower"] = region_json(inst.partition, e.lower);
        el["upper"] = region_json(inst.partition, e.upper);
        if (e.provenance)
            el["provenance"] = {e.provenance->first.str(), e.provenance->second.str()};
        fam_json.push_back(std::move(el));
    }
    result["family"] = std::move(fam_json);
    result["family_closed"] = family_report.closed;
    result["closure_size"] = closed.size();
    ordered_json closure_json = ordered_json::array();
    for (const LatticeElement& e : closed) {
        ordered_json el;
        el["lower"] = region_json(inst.partition, e.lower);
        el["upper"] = region_json(inst.partition, e.upper);
        if (e.provenance)
            el["provenance"] = {e.provenance->first.str(), e.provenance->second.str()};
        closure_json.push_back(std::move(el));
    }
    result["closure"] = std::move(closure_json);
    result["join_table"] = join_table;
    result["meet_table"] = meet_table;

    ordered_json checks;
    ordered_json laws = ordered_json::array();
    for (const auto& [name, law] : report.laws) {
        ordered_json l;
        l["law"] = name;
        l["status"] = law.holds ? "PASS" : "FAIL";
        laws.push_back(std::move(l));
    }
    checks["laws"] = std::move(laws);
    checks["closed"] = report.closed;
    checks["checked_triples"] = report.checked_triples;

    ordered_json doc = json_envelope(cfg, std::move(params), std::move(result));
    doc["checks"] = std::move(checks);

    emit(out, cfg.format, text.str(), doc);
    return report.all_hold() ? 0 : 3;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckOutcome {
    std::string name;
    bool pass;
};

// Runs every structural invariant of the approximation and lattice modules
// against one instance over its full critical grid (with 0 and 1/2 added).
std::vector<CheckOutcome> run_checks(const Instance& inst) {
    std::vector<CheckOutcome> outcomes;
    const auto record = [&](std::string name, bool pass) {
        outcomes.push_back(CheckOutcome{std::move(name), pass});
    };

    const Partition& partition = inst.partition;
    const Subset& target = inst.target;
    const Subset all = Subset::full(partition.universe());
    const BetaGrid grid = BetaGrid::full(partition, target, /*include_half=*/true);

    std::vector<VprsResult> results;
    results.reserve(grid.size());
    for (const Precision& beta : grid.values()) results.push_back(vprs(partition, target, beta));
    const RoughResult plain = pawlak(partition, target);

    // Three-way split covers the universe, pairwise disjoint.
    bool split_ok = true, vprsve_split_ok = true, lower_in_upper = true, definable = true;
    bool accuracy_range = true;
    const Rational zero(0), one(1);
    for (const VprsResult& r : results) {
        split_ok &= (r.positive | r.boundary | r.negative) == all;
        split_ok &= (r.positive & r.boundary).none() && (r.boundary & r.negative).none() &&
                    (r.positive & r.negative).none();
        lower_in_upper &= r.lower.is_subset_of(r.upper);
        accuracy_range &= zero <= r.accuracy && r.accuracy <= one;
        for (std::size_t b = 0; b < partition.block_count(); ++b) {
            const Bitset& blk = partition.block(b).bits();
            const Bitset in_lower = blk & r.lower.bits();
            const Bitset in_upper = blk & r.upper.bits();
            definable &= in_lower.none() || in_lower == blk;
            definable &= in_upper.none() || in_upper == blk;
        }
    }
    record("region-partition", split_ok);
    record("lower-within-upper", lower_in_upper);
    record("definability", definable);
    record("accuracy-range", accuracy_range);

    // Split-error pairs: same region algebra, lower and upper decoupled.
    bool coincidence = true;
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const VprsveResult r =
                vprsve(partition, target, grid.values()[i], grid.values()[j]);
            vprsve_split_ok &= (r.positive | r.boundary | r.negative) == all;
            vprsve_split_ok &= (r.positive & r.boundary).none() &&
                               (r.boundary & r.negative).none() &&
                               (r.positive & r.negative).none();
            vprsve_split_ok &= r.lower.is_subset_of(r.upper);
            coincidence &= r.positive == results[i].positive;
            coincidence &= r.negative == results[j].negative;
        }
    record("split-error-region-partition", vprsve_split_ok);
    record("split-error-coincidence", coincidence);

    // Zero error reproduces the classical approximations exactly.
    const VprsResult& at_zero = results.front();
    record("zero-error-matches-classical",
           at_zero.lower == plain.lower && at_zero.upper == plain.upper &&
               at_zero.positive == plain.positive && at_zero.boundary == plain.boundary &&
               at_zero.negative == plain.negative && at_zero.accuracy == plain.accuracy);

    // Monotone families along the grid.
    bool lower_mono = true, upper_anti = true, pos_mono = true, neg_mono = true, bnd_anti = true,
         acc_mono = true;
    for (std::size_t i = 0; i + 1 < results.size(); ++i) {
        lower_mono &= results[i].lower.is_subset_of(results[i + 1].lower);
        upper_anti &= results[i + 1].upper.is_subset_of(results[i].upper);
        pos_mono &= results[i].positive.is_subset_of(results[i + 1].positive);
        neg_mono &= results[i].negative.is_subset_of(results[i + 1].negative);
        bnd_anti &= results[i + 1].boundary.is_subset_of(results[i].boundary);
        acc_mono &= results[i].accuracy <= results[i + 1].accuracy;
    }
    record("lower-monotone", lower_mono);
    record("upper-anti-monotone", upper_anti);
    record("positive-monotone", pos_mono);
    record("negative-monotone", neg_mono);
    record("boundary-anti-monotone", bnd_anti);
    record("accuracy-monotone", acc_mono);

    record("boundary-empty-at-half", results.back().boundary.none());

    // Regions are constant strictly between critical thresholds and change
    // only at them.
    {
        const ThresholdProfile profile = thresholds(partition, target);
        const Rational half(BigInt(1), BigInt(2));
        std::vector<Rational> fence;
        fence.push_back(zero);
        for (const Rational& c : profile.critical) fence.push_back(c);
        if (fence.back() != half) fence.push_back(half);

        const auto eval = [&](const Rational& beta) { return vprs(partition, target, Precision(beta)); };
        const auto same = [](const VprsResult& a, const VprsResult& b) {
            return a.lower == b.lower && a.upper == b.upper;
        };
        bool stable = true;
        std::vector<VprsResult> low_probe, high_probe; // per interval
        for (std::size_t i = 0; i + 1 < fence.size(); ++i) {
            const Rational gap = fence[i + 1] - fence[i];
            const Rational third = gap / Rational(3);
            VprsResult a = eval(fence[i] + third);
            VprsResult b = eval(fence[i + 1] - third);
            stable &= same(a, b);
            low_probe.push_back(std::move(a));
            high_probe.push_back(std::move(b));
        }
        if (!profile.critical.empty()) {
            // Left end of the first interval extends to beta = 0 ...
            stable &= same(results.front(), low_probe.front());
            // ... and the last interval extends through beta = 1/2.
            if (profile.critical.back() != half)
                stable &= same(eval(half), high_probe.back());
            // Every critical value must actually change the regions, on one
            // side or the other.
            for (std::size_t c = 0; c < profile.critical.size(); ++c) {
                const VprsResult at = eval(profile.critical[c]);
                bool changes = !same(at, high_probe[c]); // versus just below
                if (c + 1 < low_probe.size()) changes |= !same(low_probe[c + 1], at);
                stable &= changes;
            }
        } else {
            stable &= same(results.front(), eval(half) ) ;
        }
        record("threshold-stability", stable);
    }

    // Chains with their least/greatest elements at the grid ends.
    {
        bool chains_ok = true;
        bool anchors_ok = false;
        try {
            const ChainReport chains = chain_report(partition, target, grid);
            anchors_ok = chains.lower_glb_at_first && chains.lower_lub_at_last &&
                         chains.upper_lub_at_first && chains.upper_glb_at_last &&
                         chains.anchored_at_rough && chains.boundary_empty_at_half;
        } catch (const ChainViolation&) {
            chains_ok = false;
        }
        record("region-chains", chains_ok);
        record("chain-endpoints", anchors_ok);
    }

    // Join/meet normal forms for same-family pairs.
    const std::vector<LatticeElement> fam = family(partition, target, grid);
    bool normal_forms = true;
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i; j < fam.size(); ++j) {
            const LatticeElement jn = join(fam[i], fam[j]);
            const LatticeElement mt = meet(fam[i], fam[j]);
            normal_forms &= jn.lower == fam[j].lower && jn.upper == fam[i].upper;
            normal_forms &= mt.lower == fam[i].lower && mt.upper == fam[j].upper;
        }
    record("join-meet-normal-forms", normal_forms);

    // Closure of the family coincides with the split-error pairs.
    const std::vector<LatticeElement> closed = closure(fam);
    {
        record("closure-size-bound", closed.size() <= grid.size() * grid.size());

        std::map<std::pair<Bitset, Bitset>, std::size_t> closure_keys;
        for (std::size_t i = 0; i < closed.size(); ++i)
            closure_keys.emplace(std::pair{closed[i].lower.bits(), closed[i].upper.bits()}, i);
        std::map<std::pair<Bitset, Bitset>, std::size_t> mixed_keys;
        for (const Precision& b : grid.values())
            for (const Precision& g : grid.values()) {
                const VprsveResult r = vprsve(partition, target, b, g);
                mixed_keys.emplace(std::pair{r.lower.bits(), r.upper.bits()}, 0);
            }
        bool match = closure_keys.size() == mixed_keys.size();
        if (match)
            for (const auto& [key, idx] : closure_keys) match &= mixed_keys.count(key) > 0;
        record("closure-is-split-error-family", match);
    }

    // The four lattice identities, exhaustively, on the closed carrier.
    const LawReport report = check_laws(closed);
    record("lattice-laws", report.all_hold() && report.closed);

    // leq is a partial order and join/meet are lub/glb within the closure.
    {
        bool reflexive = true, antisymmetric = true, transitive = true;
        for (const LatticeElement& e : closed) reflexive &= leq(e, e);
        for (std::size_t i = 0; i < closed.size(); ++i)
            for (std::size_t j = 0; j < closed.size(); ++j) {
                if (leq(closed[i], closed[j]) && leq(closed[j], closed[i]))
                    antisymmetric &= equal(closed[i], closed[j]);
                for (std::size_t k = 0; k < closed.size(); ++k)
                    if (leq(closed[i], closed[j]) && leq(closed[j], closed[k]))
                        transitive &= leq(closed[i], closed[k]);
            }
        bool bounds = true;
        for (std::size_t i = 0; i < closed.size(); ++i)
            for (std::size_t j = 0; j < closed.size(); ++j) {
                const LatticeElement jn = join(closed[i], closed[j]);
                const LatticeElement mt = meet(closed[i], closed[j]);
                bounds &= leq(closed[i], jn) && leq(closed[j], jn);
                bounds &= leq(mt, closed[i]) && leq(mt, closed[j]);
                for (const LatticeElement& c : closed) {
                    if (leq(closed[i], c) && leq(closed[j], c)) bounds &= leq(jn, c);
                    if (leq(c, closed[i]) && leq(c, closed[j])) bounds &= leq(c, mt);
                }
            }
        record("order-properties", reflexive && antisymmetric && transitive && bounds);
    }

    return outcomes;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const Instance inst = load_instance(cfg);
    const BetaGrid grid = BetaGrid::full(inst.partition, inst.target, /*include_half=*/true);
    const std::vector<CheckOutcome> outcomes = run_checks(inst);
    const bool all_pass =
        std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.pass; });

    std::ostringstream text;
    render_instance_text(text, cfg, inst);
    text << "grid:";
    for (std::size_t i = 0; i < grid.size(); ++i)
        text << (i ? ", " : " ") << grid.values()[i].str();
    text << "\n";
    text << "checks:\n";
    for (const CheckOutcome& o : outcomes)
        text << "  " << o.name << ": " << (o.pass ? "PASS" : "FAIL") << "\n";
    text << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";

    ordered_json result = instance_json(cfg, inst);
    ordered_json grid_json = ordered_json::array();
    for (const Precision& p : grid.values()) grid_json.push_back(p.str());
    result["grid"] = std::move(grid_json);

    ordered_json checks = ordered_json::array();
    for (const CheckOutcome& o : outcomes) {
        ordered_json c;
        c["check"] = o.name;
        c["status"] = o.pass ? "PASS" : "FAIL";
        checks.push_back(std::move(c));
    }

    ordered_json doc = json_envelope(cfg, ordered_json::object(), std::move(result));
    doc["checks"] = std::move(checks);

    emit(out, cfg.format, text.str(), doc);
    return all_pass ? 0 : 3;
}

} // namespace

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rough-set, variable-precision and split-error approximations over finite "
                 "granulated universes, with exact rational thresholds"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", cfg.input_path, "instance JSON or decision-table CSV")
            ->required();
        CLI::Option* table = sub->add_flag("--table", cfg.table_mode, "treat the input as a CSV decision table");
        CLI::Option* attrs = sub->add_option("--attrs", cfg.attrs, "comma-separated condition attributes (table mode)");
        CLI::Option* decision = sub->add_option("--decision", cfg.decision, "decision column=value (table mode)");
        table->needs(attrs)->needs(decision);
        attrs->needs(table);
        decision->needs(table);
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* regions = app.add_subcommand("regions", "lower/upper approximations and D/BN/N regions");
    add_common(regions);
    regions->add_option("--beta", cfg.beta, "classification error in [0, 1/2]")->required();
    regions->add_option("--gamma", cfg.gamma, "separate error for the upper approximation");

    CLI::App* thresholds_cmd = app.add_subcommand("thresholds", "per-block overlap degrees and critical thresholds");
    add_common(thresholds_cmd);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "one region row per critical threshold");
    add_common(sweep_cmd);

    CLI::App* lattice_cmd = app.add_subcommand("lattice", "family, closure, Cayley tables and lattice laws");
    add_common(lattice_cmd);
    lattice_cmd->add_option("--grid", cfg.grid, "comma-separated error grid (default: 0 plus critical thresholds)");

    CLI::App* check_cmd = app.add_subcommand("check", "verify every structural invariant on one instance");
    add_common(check_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("vprs");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (regions->parsed()) {
            cfg.command = "regions";
            cfg.format = format == "json" ? Format::json : Format::text;
            return cmd_regions(cfg, out, err);
        }
        if (thresholds_cmd->parsed()) {
            cfg.command = "thresholds";
            cfg.format = format == "json" ? Format::json : Format::text;
            return cmd_thresholds(cfg, out);
        }
        if (sweep_cmd->parsed()) {
            cfg.command = "sweep";
            cfg.format = format == "json" ? Format::json : Format::text;
            return cmd_sweep(cfg, out);
        }
        if (lattice_cmd->parsed()) {
            cfg.command = "lattice";
            cfg.format = format == "json" ? Format::json : Format::text;
            return cmd_lattice(cfg, out, err);
        }
        cfg.command = "check";
        cfg.format = format == "json" ? Format::json : Format::text;
        return cmd_check(cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace rough
