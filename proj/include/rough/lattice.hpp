#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rough/approximation.hpp"

namespace rough {

// An approximation pair closed under component-wise union and intersection.
// Order, equality, join and meet act on the realized sets only; provenance
// records which precisions generated the pair when that is known (an element
// with provenance (b, g) is exactly the split-error pair at (b, g)).
struct LatticeElement {
    Subset lower, upper;
    std::optional<std::pair<Precision, Precision>> provenance;
};

LatticeElement element_of(const Partition& partition, const Subset& target, const Precision& beta);

// Component-wise containment: a.lower ⊆ b.lower and a.upper ⊆ b.upper.
bool leq(const LatticeElement& a, const LatticeElement& b);

// Realized-set equality; provenance is ignored.
bool equal(const LatticeElement& a, const LatticeElement& b);

// Component-wise union / intersection. For two elements of one family with
// precisions bi <= bj these realize (lower(bj), upper(bi)) and
// (lower(bi), upper(bj)) respectively.
LatticeElement join(const LatticeElement& a, const LatticeElement& b);
LatticeElement meet(const LatticeElement& a, const LatticeElement& b);

// Ascending, deduplicated precisions in [0, 1/2].
class BetaGrid {
public:
    static BetaGrid of(std::vector<Precision> values);
    // {0} ∪ critical thresholds of the instance; optionally forces 1/2 in.
    static BetaGrid full(const Partition& partition, const Subset& target, bool include_half = false);

    const std::vector<Precision>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    explicit BetaGrid(std::vector<Precision> values) : values_(std::move(values)) {}
    std::vector<Precision> values_;
};

// One element per grid precision, in grid order. Elements that realize the
// same pair are retained (their provenance differs).
std::vector<LatticeElement> family(const Partition& partition, const Subset& target, const BetaGrid& grid);

// Smallest superset of the input closed under join and meet, deduplicated by
// realized-set equality. Output order is deterministic: inputs first (first
// occurrence kept), then discovered elements in generation order. The
// parallel and serial variants produce identical sequences.
std::vector<LatticeElement> closure(const std::vector<LatticeElement>& elements);
std::vector<LatticeElement> closure_serial(const std::vector<LatticeElement>& elements);

struct LawCounterexample {
    std::string identity;               // e.g. "join-associativity"
    std::array<std::size_t, 3> operands; // indices into the checked sequence
    LatticeElement lhs, rhs;
};

struct LawResult {
    bool holds = true;
    std::optional<LawCounterexample> counterexample;
};

struct ClosureEscape {
    std::size_t a = 0, b = 0;
    bool is_join = true;
    LatticeElement result; // the pair that is not in the checked sequence
};

struct LawReport {
    // Fixed order: idempotence, commutativity, associativity, absorption.
    std::vector<std::pair<std::string, LawResult>> laws;
    std::size_t element_count = 0;
    std::size_t checked_triples = 0; // associativity space, |elements|^3
    bool closed = true;              // join/meet never escaped the element set
    std::optional<ClosureEscape> escape;

    bool all_hold() const;
};

// Exhaustive law check: idempotence over all elements, commutativity over all
// pairs, associativity over all triples, absorption over all ordered pairs,
// for both join and meet; plus a closure scan. The first counterexample per
// law is reported, by lexicographic operand order, independent of scheduling.
// check_laws partitions the search space across OpenMP threads when enabled;
// check_laws_serial is the single-threaded reference and always returns the
// same report.
LawReport check_laws(std::span<const LatticeElement> elements);
LawReport check_laws_serial(std::span<const LatticeElement> elements);

// Verifies the total chains along an ascending beta grid: lower, positive and
// negative grow, upper and boundary shrink. Throws ChainViolation when some
// pair of grid points breaks a chain (never expected on a correct build).
struct ChainReport {
    std::vector<Precision> grid;
    std::vector<std::size_t> lower_sizes, upper_sizes;
    std::vector<std::size_t> positive_sizes, boundary_sizes, negative_sizes;
    // Least/greatest elements sit at the grid ends once the chains hold.
    bool lower_glb_at_first = false, lower_lub_at_last = false;
    bool upper_lub_at_first = false, upper_glb_at_last = false;
    // Grid starts at 0 and its positive/boundary/negative match pawlak's.
    bool anchored_at_rough = false;
    // Grid ends at 1/2 and the boundary there is empty.
    bool boundary_empty_at_half = false;
};

ChainReport chain_report(const Partition& partition, const Subset& target, const BetaGrid& grid);

} // namespace rough
