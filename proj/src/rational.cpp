#include "rough/rational.hpp"

#include <cctype>
#include <ostream>

namespace rough {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::duplicate_label: return "DuplicateLabel";
        case errc::empty_universe: return "EmptyUniverse";
        case errc::not_disjoint: return "NotDisjoint";
        case errc::not_covering: return "NotCovering";
        case errc::unknown_label: return "UnknownLabel";
        case errc::empty_block: return "EmptyBlock";
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::precision_out_of_range: return "PrecisionOutOfRange";
        case errc::universe_mismatch: return "UniverseMismatch";
        case errc::ragged_row: return "RaggedRow";
        case errc::duplicate_object: return "DuplicateObject";
        case errc::empty_table: return "EmptyTable";
        case errc::unknown_attribute: return "UnknownAttribute";
        case errc::empty_attribute_set: return "EmptyAttributeSet";
        case errc::chain_violation: return "ChainViolation";
        case errc::parse_error: return "ParseError";
        case errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

Rational::Rational(BigInt numerator, BigInt denominator) {
    if (denominator.is_zero())
        throw Error(errc::zero_denominator, "denominator must be non-zero");
    if (denominator < 0) { // cpp_rational requires a positive denominator
        numerator = -numerator;
        denominator = -denominator;
    }
    value_ = backend(std::move(numerator), std::move(denominator));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_.is_zero())
        throw Error(errc::zero_denominator, "division by zero");
    return Rational(Rational::backend(a.value_ / b.value_));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt pow10(std::size_t k) {
    BigInt p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= 10;
    return p;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    auto fail = [&] { throw ParseError("not a rational literal: '" + std::string(text) + "'"); };

    BigInt num, den;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view p = rest.substr(0, slash);
        std::string_view q = rest.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) fail();
        num = BigInt(std::string(p));
        den = BigInt(std::string(q));
        if (den.is_zero())
            throw Error(errc::zero_denominator, "denominator must be non-zero in '" + std::string(text) + "'");
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view ip = rest.substr(0, dot);
        std::string_view fp = rest.substr(dot + 1);
        if (ip.empty() && fp.empty()) fail();
        if (!ip.empty() && !all_digits(ip)) fail();
        if (!fp.empty() && !all_digits(fp)) fail();
        BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
        BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp));
        den = pow10(fp.size());
        num = whole * den + frac;
    } else {
        if (!all_digits(rest)) fail();
        num = BigInt(std::string(rest));
        den = 1;
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    BigInt d = den();
    if (d == 1) return num().str();
    return num().str() + "/" + d.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace rough
