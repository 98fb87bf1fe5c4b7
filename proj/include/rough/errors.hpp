#pragma once

#include <stdexcept>
#include <string>

namespace rough {

// Every failure the library can report, keyed for programmatic handling.
enum class errc {
    duplicate_label,
    empty_universe,
    not_disjoint,
    not_covering,
    unknown_label,
    empty_block,
    zero_denominator,
    precision_out_of_range,
    universe_mismatch,
    ragged_row,
    duplicate_object,
    empty_table,
    unknown_attribute,
    empty_attribute_set,
    chain_violation,
    parse_error,
    bad_argument,
};

const char* errc_name(errc code) noexcept;

// Validation failure: the input was readable but violates a domain invariant.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    errc code() const noexcept { return code_; }
    // The message without the code prefix, for re-wrapping with context.
    const std::string& message() const noexcept { return message_; }

private:
    errc code_;
    std::string message_;
};

// Malformed document or literal: the input could not be read at all.
// Kept distinct from plain Error so the CLI can map it to its own exit code.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::string location = {})
        : Error(errc::parse_error, location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

// An ordered-chain check found a pair of precisions out of order. This never
// fires on a correct build; it exists so the checker fails loudly, not softly.
class ChainViolation : public Error {
public:
    ChainViolation(const std::string& family, const std::string& beta_low, const std::string& beta_high)
        : Error(errc::chain_violation,
                family + " chain violated between beta=" + beta_low + " and beta=" + beta_high),
          family_(family) {}

    const std::string& family() const noexcept { return family_; }

private:
    std::string family_;
};

} // namespace rough
