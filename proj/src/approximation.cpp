#include "rough/approximation.hpp"

#include <algorithm>

namespace rough {

Precision::Precision(Rational value) : value_(std::move(value)) {
    static const Rational half(BigInt(1), BigInt(2));
    if (value_ < Rational(0) || value_ > half)
        throw Error(errc::precision_out_of_range,
                    "classification error " + value_.str() + " outside [0, 1/2]");
}

Rational overlap_degree(const Partition& partition, std::size_t block, const Subset& target) {
    if (!same_universe(partition.universe(), target.universe()))
        throw Error(errc::universe_mismatch, "target lives in a different universe than the partition");
    const std::size_t size = partition.block_size(block);
    const std::size_t inside = (partition.block(block).bits() & target.bits()).count();
    return Rational(BigInt(size - inside), BigInt(size));
}

namespace {

// Assembles the five regions and the accuracy from per-block membership.
template <typename InLower, typename InUpper>
void classify(const Partition& partition, const Subset& target, InLower in_lower, InUpper in_upper,
              Subset& lower, Subset& upper, Subset& positive, Subset& boundary, Subset& negative,
              Rational& accuracy) {
    if (!same_universe(partition.universe(), target.universe()))
        throw Error(errc::universe_mismatch, "target lives in a different universe than the partition");
    const auto& u = partition.universe();
    Bitset lower_bits(u->size()), upper_bits(u->size());
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        const std::size_t size = partition.block_size(b);
        const std::size_t inside = (partition.block(b).bits() & target.bits()).count();
        const Rational degree(BigInt(size - inside), BigInt(size));
        if (in_lower(degree)) lower_bits |= partition.block(b).bits();
        if (in_upper(degree)) upper_bits |= partition.block(b).bits();
    }
    lower = Subset(u, lower_bits);
    upper = Subset(u, upper_bits);
    positive = lower;
    boundary = Subset(u, upper_bits - lower_bits);
    negative = Subset(u, ~upper_bits);
    accuracy = upper.none() ? Rational(1) : Rational(BigInt(lower.count()), BigInt(upper.count()));
}

const Rational kOne(1);

} // namespace

RoughResult pawlak(const Partition& partition, const Subset& target) {
    RoughResult r{Subset::empty(partition.universe()), Subset::empty(partition.universe()),
                  Subset::empty(partition.universe()), Subset::empty(partition.universe()),
                  Subset::empty(partition.universe()), Rational(0)};
    classify(
        partition, target, [](const Rational& d) { return d.is_zero(); },
        [](const Rational& d) { return d < kOne; }, r.lower, r.upper, r.positive, r.boundary,
        r.negative, r.accuracy);
    return r;
}

VprsResult vprs(const Partition& partition, const Subset& target, const Precision& beta) {
    const Rational& b = beta.value();
    const Rational upper_bound = kOne - b;
    VprsResult r{beta,
                 Subset::empty(partition.universe()), Subset::empty(partition.universe()),
                 Subset::empty(partition.universe()), Subset::empty(partition.universe()),
                 Subset::empty(partition.universe()), Rational(0)};
    classify(
        partition, target, [&](const Rational& d) { return d <= b; },
        [&](const Rational& d) { return d <= upper_bound && d < kOne; }, r.lower, r.upper,
        r.positive, r.boundary, r.negative, r.accuracy);
    return r;
}

VprsveResult vprsve(const Partition& partition, const Subset& target, const Precision& beta,
                    const Precision& gamma) {
    const VprsResult at_beta = vprs(partition, target, beta);
    const VprsResult at_gamma = vprs(partition, target, gamma);
    Subset lower = at_beta.lower;
    Subset upper = at_gamma.upper;
    Subset boundary = upper - lower;
    Subset negative = ~upper;
    Rational accuracy =
        upper.none() ? Rational(1) : Rational(BigInt(lower.count()), BigInt(upper.count()));
    return VprsveResult{beta, gamma, lower, upper, lower, boundary, negative, accuracy};
}

ThresholdProfile thresholds(const Partition& partition, const Subset& target) {
    ThresholdProfile profile;
    profile.degrees.reserve(partition.block_count());
    for (std::size_t b = 0; b < partition.block_count(); ++b)
        profile.degrees.push_back(overlap_degree(partition, b, target));

    static const Rational half(BigInt(1), BigInt(2));
    std::vector<Rational> candidates;
    for (const Rational& d : profile.degrees) {
        const Rational mirrored = kOne - d;
        if (Rational(0) < d && d <= half) candidates.push_back(d);
        if (Rational(0) < mirrored && mirrored <= half) candidates.push_back(mirrored);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    profile.critical = std::move(candidates);
    return profile;
}

std::vector<VprsResult> sweep(const Partition& partition, const Subset& target) {
    const ThresholdProfile profile = thresholds(partition, target);
    std::vector<VprsResult> entries;
    entries.reserve(profile.critical.size() + 1);
    entries.push_back(vprs(partition, target, Precision::zero()));
    for (const Rational& c : profile.critical)
        entries.push_back(vprs(partition, target, Precision(c)));
    return entries;
}

} // namespace rough
