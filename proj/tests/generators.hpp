#pragma once

// Deterministic random instances shared by the property tests and the
// acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "rough/approximation.hpp"
#include "rough/ingestion.hpp"

#include "oracle.hpp"

namespace gen {

struct RawInstance {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> target;
};

inline RawInstance random_instance(std::mt19937& rng, std::size_t max_universe) {
    RawInstance raw;
    std::uniform_int_distribution<std::size_t> size_dist(1, max_universe);
    const std::size_t n = size_dist(rng);
    for (std::size_t i = 0; i < n; ++i) raw.labels.push_back("e" + std::to_string(i + 1));

    std::vector<std::string> shuffled = raw.labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::uniform_int_distribution<int> cut(0, 2);
    raw.blocks.emplace_back();
    for (const std::string& label : shuffled) {
        if (!raw.blocks.back().empty() && cut(rng) == 0) raw.blocks.emplace_back();
        raw.blocks.back().push_back(label);
    }

    std::uniform_int_distribution<int> mode(0, 9);
    const int m = mode(rng);
    if (m == 0) {
        // empty target
    } else if (m == 1) {
        raw.target = raw.labels;
    } else {
        std::uniform_int_distribution<int> coin(0, 1);
        for (const std::string& label : raw.labels)
            if (coin(rng)) raw.target.push_back(label);
    }
    return raw;
}

inline rough::Instance realize(const RawInstance& raw) {
    rough::UniversePtr u = rough::Universe::make(raw.labels);
    rough::Partition partition = rough::Partition::make(u, raw.blocks);
    rough::Subset target =
        rough::Subset::of_labels(u, std::span<const std::string>(raw.target));
    return rough::Instance{u, std::move(partition), std::move(target), std::nullopt};
}

inline oracle::Inst to_oracle(const RawInstance& raw) {
    oracle::Inst inst;
    inst.labels = raw.labels;
    inst.blocks = raw.blocks;
    inst.target.insert(raw.target.begin(), raw.target.end());
    return inst;
}

// A random exact error in [0, 1/2] with a small denominator; occasionally
// exactly 0 or exactly 1/2.
inline rough::Rational random_error(std::mt19937& rng) {
    std::uniform_int_distribution<int> mode(0, 9);
    const int m = mode(rng);
    if (m == 0) return rough::Rational(0);
    if (m == 1) return rough::Rational(rough::BigInt(1), rough::BigInt(2));
    std::uniform_int_distribution<long long> den_dist(2, 12);
    const long long den = den_dist(rng);
    std::uniform_int_distribution<long long> num_dist(0, den / 2);
    return rough::Rational(rough::BigInt(num_dist(rng)), rough::BigInt(den));
}

inline oracle::Frac to_frac(const rough::Rational& r) {
    return oracle::Frac{r.num().convert_to<long long>(), r.den().convert_to<long long>()};
}

} // namespace gen
