#pragma once

#include "atlas/integer.hpp"
#include "atlas/support.hpp"

#include <cstdint>
#include <vector>

namespace atlas {

/// Outcome of counting torus roots of random systems on a BK-tuple.
struct OracleVerdict {
    Integer mixed_volume;
    int accepted = 0;
    int rejected = 0;              ///< draws that failed a genericity check and were redrawn
    std::vector<Integer> counts;  ///< root count per accepted draw
    Integer max_count = 0;
    int mismatches = 0;            ///< accepted draws whose count differs from the mixed volume

    bool agrees() const { return accepted > 0 && max_count == mixed_volume; }
};

/// Exact root counting after elimination; the tuple is first moved to its
/// saturated span, which must have rank at most 2.
OracleVerdict bernstein_oracle(const SupportTuple& t, int trials, std::uint64_t seed);

} // namespace atlas
