#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

#include "rough/errors.hpp"

namespace rough {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical form: lowest terms, denominator
// positive, sign carried on the numerator. Ordering and equality are exact;
// nothing here ever rounds through floating point.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(BigInt numerator, BigInt denominator);

    // Accepts "p/q", integer literals and decimal literals ("0.25" -> 1/4).
    // Decimals convert exactly: "0.33" is 33/100, not 1/3.
    static Rational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }

    // Renders "p/q" in lowest terms, or just "p" for integers.
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-value_); }

private:
    using backend = boost::multiprecision::cpp_rational;
    explicit Rational(backend v) : value_(std::move(v)) {}

    backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace rough
