#pragma once

// Helpers shared by the unit tests and the acceptance runner: fixture
// loading and the frozen expected values for the bundled paper-a instance.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "rough/approximation.hpp"
#include "rough/ingestion.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) {
    return std::string(ROUGH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline rough::Instance load_fixture(const std::string& name = "paper-a.json") {
    return rough::realize(rough::parse_instance(read_file(fixture_path(name))));
}

// Union of the given 1-based block indices, for comparing regions against
// expected block compositions.
inline rough::Subset blocks_union(const rough::Partition& partition,
                                  std::initializer_list<std::size_t> one_based) {
    rough::Bitset bits(partition.universe()->size());
    for (std::size_t b : one_based) bits |= partition.block(b - 1).bits();
    return rough::Subset(partition.universe(), bits);
}

inline rough::Rational frac(long long num, long long den) {
    return rough::Rational(rough::BigInt(num), rough::BigInt(den));
}

inline rough::Precision prec(long long num, long long den) { return rough::Precision(frac(num, den)); }

} // namespace support
