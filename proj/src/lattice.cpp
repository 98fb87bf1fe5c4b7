#include "rough/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rough {

namespace {

void require_same(const UniversePtr& a, const UniversePtr& b) {
    if (!same_universe(a, b))
        throw Error(errc::universe_mismatch, "lattice elements live in different universes");
}

using ProvPair = std::optional<std::pair<Precision, Precision>>;

ProvPair combine_join(const ProvPair& a, const ProvPair& b) {
    if (!a || !b) return std::nullopt;
    // Realized join takes the lower approximation of the larger error and the
    // upper approximation of the smaller one.
    return std::pair{std::max(a->first, b->first), std::min(a->second, b->second)};
}

ProvPair combine_meet(const ProvPair& a, const ProvPair& b) {
    if (!a || !b) return std::nullopt;
    return std::pair{std::min(a->first, b->first), std::max(a->second, b->second)};
}

} // namespace

LatticeElement element_of(const Partition& partition, const Subset& target, const Precision& beta) {
    VprsResult r = vprs(partition, target, beta);
    return LatticeElement{std::move(r.lower), std::move(r.upper), std::pair{beta, beta}};
}

bool leq(const LatticeElement& a, const LatticeElement& b) {
    return a.lower.is_subset_of(b.lower) && a.upper.is_subset_of(b.upper);
}

bool equal(const LatticeElement& a, const LatticeElement& b) {
    return a.lower == b.lower && a.upper == b.upper;
}

LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
    return LatticeElement{a.lower | b.lower, a.upper | b.upper,
                          combine_join(a.provenance, b.provenance)};
}

LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
    return LatticeElement{a.lower & b.lower, a.upper & b.upper,
                          combine_meet(a.provenance, b.provenance)};
}

BetaGrid BetaGrid::of(std::vector<Precision> values) {
    std::sort(values.begin(), values.end(),
              [](const Precision& a, const Precision& b) { return a < b; });
    values.erase(std::unique(values.begin(), values.end(),
                             [](const Precision& a, const Precision& b) { return a == b; }),
                 values.end());
    return BetaGrid(std::move(values));
}

BetaGrid BetaGrid::full(const Partition& partition, const Subset& target, bool include_half) {
    const ThresholdProfile profile = thresholds(partition, target);
    std::vector<Precision> values;
    values.reserve(profile.critical.size() + 2);
    values.push_back(Precision::zero());
    for (const Rational& c : profile.critical) values.push_back(Precision(c));
    if (include_half) values.push_back(Precision::half());
    return of(std::move(values));
}

std::vector<LatticeElement> family(const Partition& partition, const Subset& target, const BetaGrid& grid) {
    std::vector<LatticeElement> out;
    out.reserve(grid.size());
    for (const Precision& beta : grid.values()) out.push_back(element_of(partition, target, beta));
    return out;
}

// ---------------------------------------------------------------------------
// Closure
// ---------------------------------------------------------------------------

namespace {

using Key = std::pair<Bitset, Bitset>;

Key key_of(const LatticeElement& e) { return Key{e.lower.bits(), e.upper.bits()}; }

constexpr std::size_t kClosureChunk = 8192; // candidate pairs per merge step

std::vector<LatticeElement> closure_impl(const std::vector<LatticeElement>& input, bool parallel) {
    std::vector<LatticeElement> out;
    if (input.empty()) return out;
    for (const LatticeElement& e : input) {
        require_same(input.front().lower.universe(), e.lower.universe());
        require_same(input.front().lower.universe(), e.upper.universe());
    }

    std::map<Key, std::size_t> seen;
    for (const LatticeElement& e : input)
        if (seen.emplace(key_of(e), out.size()).second) out.push_back(e);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<LatticeElement> candidates;
    std::size_t fresh_begin = 0;
    while (fresh_begin < out.size()) {
        const std::size_t end = out.size();
        pairs.clear();
        for (std::size_t i = 0; i < end; ++i)
            for (std::size_t j = std::max(i, fresh_begin); j < end; ++j) pairs.emplace_back(i, j);

        for (std::size_t base = 0; base < pairs.size(); base += kClosureChunk) {
            const std::size_t chunk = std::min(kClosureChunk, pairs.size() - base);
            candidates.assign(2 * chunk, LatticeElement{out.front().lower, out.front().upper, {}});
            const auto compute = [&](std::size_t c) {
                const auto [i, j] = pairs[base + c];
                candidates[2 * c] = join(out[i], out[j]);
                candidates[2 * c + 1] = meet(out[i], out[j]);
            };
            if (parallel) {
#pragma omp parallel for schedule(static)
                for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunk); ++c)
                    compute(static_cast<std::size_t>(c));
            } else {
                for (std::size_t c = 0; c < chunk; ++c) compute(c);
            }
            for (LatticeElement& cand : candidates)
                if (seen.emplace(key_of(cand), out.size()).second) out.push_back(std::move(cand));
        }
        fresh_begin = end;
    }
    return out;
}

} // namespace

std::vector<LatticeElement> closure(const std::vector<LatticeElement>& elements) {
    return closure_impl(elements, true);
}

std::vector<LatticeElement> closure_serial(const std::vector<LatticeElement>& elements) {
    return closure_impl(elements, false);
}

// ---------------------------------------------------------------------------
// Law checking
// ---------------------------------------------------------------------------

bool LawReport::all_hold() const {
    return std::all_of(laws.begin(), laws.end(), [](const auto& l) { return l.second.holds; });
}

namespace {

constexpr std::int64_t kNoViolation = std::numeric_limits<std::int64_t>::max();

// Reusable temporaries so the hot scans do not allocate per step.
struct Scratch {
    Bitset t1, t2;
};

enum class Law { idempotence, commutativity, associativity, absorption, closure_scan };

// Flattened, lexicographically ordered search space per law. Even flat
// indices check the join identity, odd ones the meet identity, so the first
// violation is well defined no matter how the scan is scheduled.
struct LawScan {
    std::span<const LatticeElement> elems;
    std::vector<const Bitset*> lo, up;
    const std::map<Key, std::size_t>* members = nullptr;

    explicit LawScan(std::span<const LatticeElement> elements) : elems(elements) {
        lo.reserve(elems.size());
        up.reserve(elems.size());
        for (const LatticeElement& e : elems) {
            lo.push_back(&e.lower.bits());
            up.push_back(&e.upper.bits());
        }
    }

    std::size_t n() const { return lo.size(); }

    std::int64_t limit(Law law) const {
        const std::int64_t m = static_cast<std::int64_t>(n());
        switch (law) {
            case Law::idempotence: return 2 * m;
            case Law::commutativity: return 2 * m * m;
            case Law::associativity: return 2 * m * m * m;
            case Law::absorption: return 2 * m * m;
            case Law::closure_scan: return 2 * m * m;
        }
        return 0;
    }

    bool violated(Law law, std::int64_t flat, Scratch& s) const {
        const bool is_meet = flat & 1;
        const std::int64_t p = flat >> 1;
        const std::int64_t m = static_cast<std::int64_t>(n());
        switch (law) {
            case Law::idempotence: {
                const std::size_t x = static_cast<std::size_t>(p);
                return !apply_matches(is_meet, x, x, *lo[x], *up[x], s);
            }
            case Law::commutativity: {
                const std::size_t i = static_cast<std::size_t>(p / m), j = static_cast<std::size_t>(p % m);
                s.t1 = *lo[i];
                s.t2 = *lo[j];
                combine(is_meet, s.t1, *lo[j]);
                combine(is_meet, s.t2, *lo[i]);
                if (s.t1 != s.t2) return true;
                s.t1 = *up[i];
                s.t2 = *up[j];
                combine(is_meet, s.t1, *up[j]);
                combine(is_meet, s.t2, *up[i]);
                return s.t1 != s.t2;
            }
            case Law::associativity: {
                const std::size_t k = static_cast<std::size_t>(p % m);
                const std::size_t j = static_cast<std::size_t>((p / m) % m);
                const std::size_t i = static_cast<std::size_t>(p / (m * m));
                // i op (j op k) versus (i op j) op k, on both components.
                s.t1 = *lo[j];
                combine(is_meet, s.t1, *lo[k]);
                combine(is_meet, s.t1, *lo[i]);
                s.t2 = *lo[i];
                combine(is_meet, s.t2, *lo[j]);
                combine(is_meet, s.t2, *lo[k]);
                if (s.t1 != s.t2) return true;
                s.t1 = *up[j];
                combine(is_meet, s.t1, *up[k]);
                combine(is_meet, s.t1, *up[i]);
                s.t2 = *up[i];
                combine(is_meet, s.t2, *up[j]);
                combine(is_meet, s.t2, *up[k]);
                return s.t1 != s.t2;
            }
            case Law::absorption: {
                const std::size_t i = static_cast<std::size_t>(p / m), j = static_cast<std::size_t>(p % m);
                // even: x ∪ (x ∩ y) = x, odd: x ∩ (x ∪ y) = x.
                s.t1 = *lo[i];
                combine(!is_meet, s.t1, *lo[j]);
                combine(is_meet, s.t1, *lo[i]);
                if (s.t1 != *lo[i]) return true;
                s.t1 = *up[i];
                combine(!is_meet, s.t1, *up[j]);
                combine(is_meet, s.t1, *up[i]);
                return s.t1 != *up[i];
            }
            case Law::closure_scan: {
                const std::size_t i = static_cast<std::size_t>(p / m), j = static_cast<std::size_t>(p % m);
                s.t1 = *lo[i];
                s.t2 = *up[i];
                combine(is_meet, s.t1, *lo[j]);
                combine(is_meet, s.t2, *up[j]);
                return members->find(Key{s.t1, s.t2}) == members->end();
            }
        }
        return false;
    }

private:
    static void combine(bool is_meet, Bitset& acc, const Bitset& operand) {
        if (is_meet)
            acc &= operand;
        else
            acc |= operand;
    }

    bool apply_matches(bool is_meet, std::size_t a, std::size_t b, const Bitset& expect_lo,
                       const Bitset& expect_up, Scratch& s) const {
        s.t1 = *lo[a];
        combine(is_meet, s.t1, *lo[b]);
        if (s.t1 != expect_lo) return false;
        s.t1 = *up[a];
        combine(is_meet, s.t1, *up[b]);
        return s.t1 == expect_up;
    }
};

std::int64_t scan(const LawScan& scan_space, Law law, bool parallel) {
    const std::int64_t limit = scan_space.limit(law);
    std::int64_t first = kNoViolation;
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            Scratch scratch;
            std::int64_t local = kNoViolation;
#pragma omp for schedule(static) nowait
            for (std::int64_t f = 0; f < limit; ++f)
                if (local == kNoViolation && scan_space.violated(law, f, scratch)) local = f;
#pragma omp critical
            first = std::min(first, local);
        }
        return first;
#endif
    }
    Scratch scratch;
    for (std::int64_t f = 0; f < limit; ++f)
        if (scan_space.violated(law, f, scratch)) return f;
    return first;
}

LawCounterexample decode(std::span<const LatticeElement> elems, Law law, std::int64_t flat) {
    const bool is_meet = flat & 1;
    const std::int64_t p = flat >> 1;
    const std::int64_t m = static_cast<std::int64_t>(elems.size());
    const auto j2 = [&](const LatticeElement& a, const LatticeElement& b) {
        return is_meet ? meet(a, b) : join(a, b);
    };
    const std::string op = is_meet ? "meet" : "join";
    switch (law) {
        case Law::idempotence: {
            const std::size_t x = static_cast<std::size_t>(p);
            return {op + "-idempotence", {x, x, x}, j2(elems[x], elems[x]), elems[x]};
        }
        case Law::commutativity: {
            const std::size_t i = static_cast<std::size_t>(p / m), j = static_cast<std::size_t>(p % m);
            return {op + "-commutativity", {i, j, j}, j2(elems[i], elems[j]), j2(elems[j], elems[i])};
        }
        case Law::associativity: {
            const std::size_t k = static_cast<std::size_t>(p % m);
            const std::size_t j = static_cast<std::size_t>((p / m) % m);
            const std::size_t i = static_cast<std::size_t>(p / (m * m));
            return {op + "-associativity",
                    {i, j, k},
                    j2(elems[i], j2(elems[j], elems[k])),
                    j2(j2(elems[i], elems[j]), elems[k])};
        }
        case Law::absorption: {
            const std::size_t i = static_cast<std::size_t>(p / m), j = static_cast<std::size_t>(p % m);
            const LatticeElement inner = is_meet ? join(elems[i], elems[j]) : meet(elems[i], elems[j]);
            return {op + "-absorption", {i, j, j}, j2(elems[i], inner), elems[i]};
        }
        case Law::closure_scan:
            break; // closure escapes are reported through LawReport::escape
    }
    throw std::logic_error("decode: not a law");
}

LawReport check_laws_impl(std::span<const LatticeElement> elements, bool parallel) {
    LawReport report;
    report.element_count = elements.size();
    report.checked_triples = elements.size() * elements.size() * elements.size();
    static const std::array<std::pair<std::string, Law>, 4> kLaws = {{
        {"idempotence", Law::idempotence},
        {"commutativity", Law::commutativity},
        {"associativity", Law::associativity},
        {"absorption", Law::absorption},
    }};
    if (elements.empty()) {
        for (const auto& [name, law] : kLaws) report.laws.emplace_back(name, LawResult{});
        return report;
    }
    for (const LatticeElement& e : elements) {
        require_same(elements.front().lower.universe(), e.lower.universe());
        require_same(elements.front().lower.universe(), e.upper.universe());
    }

    std::map<Key, std::size_t> members;
    for (std::size_t i = 0; i < elements.size(); ++i) members.emplace(key_of(elements[i]), i);

    LawScan space(elements);
    space.members = &members;

    for (const auto& [name, law] : kLaws) {
        const std::int64_t first = scan(space, law, parallel);
        LawResult result;
        if (first != kNoViolation) {
            result.holds = false;
            result.counterexample = decode(elements, law, first);
        }
        report.laws.emplace_back(name, std::move(result));
    }

    const std::int64_t escape_at = scan(space, Law::closure_scan, parallel);
    if (escape_at != kNoViolation) {
        report.closed = false;
        const bool is_meet = escape_at & 1;
        const std::int64_t p = escape_at >> 1;
        const std::int64_t m = static_cast<std::int64_t>(elements.size());
        const std::size_t i = static_cast<std::size_t>(p / m), j = static_cast<std::size_t>(p % m);
        report.escape = ClosureEscape{
            i, j, !is_meet,
            is_meet ? meet(elements[i], elements[j]) : join(elements[i], elements[j])};
    }
    return report;
}

} // namespace

LawReport check_laws(std::span<const LatticeElement> elements) { return check_laws_impl(elements, true); }

LawReport check_laws_serial(std::span<const LatticeElement> elements) {
    return check_laws_impl(elements, false);
}

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

ChainReport chain_report(const Partition& partition, const Subset& target, const BetaGrid& grid) {
    ChainReport report;
    report.grid = grid.values();

    std::vector<VprsResult> results;
    results.reserve(grid.size());
    for (const Precision& beta : grid.values()) results.push_back(vprs(partition, target, beta));

    const auto check = [&](const char* family, bool ok, std::size_t i) {
        if (!ok)
            throw ChainViolation(family, grid.values()[i].str(), grid.values()[i + 1].str());
    };
    for (std::size_t i = 0; i + 1 < results.size(); ++i) {
        const VprsResult& a = results[i];
        const VprsResult& b = results[i + 1];
        check("lower", a.lower.is_subset_of(b.lower), i);
        check("upper", b.upper.is_subset_of(a.upper), i);
        check("positive", a.positive.is_subset_of(b.positive), i);
        check("negative", a.negative.is_subset_of(b.negative), i);
        check("boundary", b.boundary.is_subset_of(a.boundary), i);
    }

    for (const VprsResult& r : results) {
        report.lower_sizes.push_back(r.lower.count());
        report.upper_sizes.push_back(r.upper.count());
        report.positive_sizes.push_back(r.positive.count());
        report.boundary_sizes.push_back(r.boundary.count());
        report.negative_sizes.push_back(r.negative.count());
    }

    if (!results.empty()) {
        report.lower_glb_at_first = report.lower_lub_at_last = true;
        report.upper_lub_at_first = report.upper_glb_at_last = true;
        for (const VprsResult& r : results) {
            report.lower_glb_at_first &= results.front().lower.is_subset_of(r.lower);
            report.lower_lub_at_last &= r.lower.is_subset_of(results.back().lower);
            report.upper_lub_at_first &= r.upper.is_subset_of(results.front().upper);
            report.upper_glb_at_last &= results.back().upper.is_subset_of(r.upper);
        }
        if (grid.values().front() == Precision::zero()) {
            const RoughResult plain = pawlak(partition, target);
            report.anchored_at_rough = results.front().positive == plain.positive &&
                                       results.front().boundary == plain.boundary &&
                                       results.front().negative == plain.negative;
        }
        if (grid.values().back() == Precision::half())
            report.boundary_empty_at_half = results.back().boundary.none();
    }
    return report;
}

} // namespace rough
