// Configuration-model samplers: uniform stub matching. Undirected samples are
// a uniformly random perfect matching of the 2L labeled stubs; directed
// samples are a uniformly random bijection from out-stubs to in-stubs.
// Self-loops and multi-edges are never rejected or resampled.

#pragma once

#include "configprob/degree_sequence.hpp"
#include "configprob/multigraph.hpp"

#include <cstdint>

namespace configprob {

// Stub array shuffled by the pinned generator, consecutive entries paired.
// Pure function of (seq, seed).
MultiGraph sample_configuration(const DegreeSequence& seq, std::uint64_t seed);

// In-stub array shuffled and paired positionally with out-stubs.
MultiGraph sample_directed_configuration(const DirectedDegreeSequence& seq,
                                         std::uint64_t seed);

} // namespace configprob
