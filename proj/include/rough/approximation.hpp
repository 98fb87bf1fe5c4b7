#pragma once

#include <vector>

#include "rough/core.hpp"
#include "rough/rational.hpp"

namespace rough {

// Admissible classification error; valid range is the closed interval [0, 1/2].
class Precision {
public:
    explicit Precision(Rational value); // throws precision_out_of_range
    static Precision zero() { return Precision(Rational(0)); }
    static Precision half() { return Precision(Rational(BigInt(1), BigInt(2))); }

    const Rational& value() const { return value_; }
    std::string str() const { return value_.str(); }

    friend bool operator==(const Precision& a, const Precision& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Precision& a, const Precision& b) { return a.value_ != b.value_; }
    friend bool operator<(const Precision& a, const Precision& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Precision& a, const Precision& b) { return a.value_ <= b.value_; }

private:
    Rational value_;
};

// Lower/upper approximation pair plus the induced three-way region split.
// positive = lower, boundary = upper \ lower, negative = U \ upper;
// accuracy = |lower| / |upper|, defined as 1 when the upper approximation is
// empty (the description is exact: nothing is possibly in the target).
struct RoughResult {
    Subset lower, upper;
    Subset positive, boundary, negative;
    Rational accuracy;
};

struct VprsResult {
    Precision beta;
    Subset lower, upper;
    Subset positive, boundary, negative;
    Rational accuracy;
};

struct VprsveResult {
    Precision beta;  // admissible error of the lower approximation
    Precision gamma; // admissible error of the upper approximation
    Subset lower, upper;
    Subset positive, boundary, negative;
    Rational accuracy;
};

// Relative misclassification error of asserting block `b` inside `target`:
// 1 - |block ∩ target| / |block|. Zero iff the block is contained in the
// target, one iff they are disjoint.
Rational overlap_degree(const Partition& partition, std::size_t block, const Subset& target);

// Classical approximations: lower takes blocks fully inside the target
// (degree 0), upper takes blocks meeting it (degree < 1).
RoughResult pawlak(const Partition& partition, const Subset& target);

// Variable-precision approximations at error beta:
//   lower = blocks with degree <= beta,
//   upper = blocks with degree <= 1 - beta that meet the target (degree < 1).
// All threshold comparisons are exact and inclusive. beta = 0 recovers pawlak.
VprsResult vprs(const Partition& partition, const Subset& target, const Precision& beta);

// Split-error variant: lower approximation at error beta, upper at error gamma.
VprsveResult vprsve(const Partition& partition, const Subset& target,
                    const Precision& beta, const Precision& gamma);

// Per-block degrees plus the critical thresholds: the values of {d} and
// {1 - d} that fall in (0, 1/2], deduplicated and ascending. The vprs regions
// are constant for beta strictly between consecutive critical values and
// change only at them (the transitioning block is included at the exact
// value, on both the lower and the upper side).
struct ThresholdProfile {
    std::vector<Rational> degrees;  // block index -> degree
    std::vector<Rational> critical; // ascending, within (0, 1/2]
};

ThresholdProfile thresholds(const Partition& partition, const Subset& target);

// One vprs evaluation at beta = 0 and at every critical threshold, ascending.
std::vector<VprsResult> sweep(const Partition& partition, const Subset& target);

} // namespace rough
