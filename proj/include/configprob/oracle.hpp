// Brute-force ground truth on tiny instances: exhaustive enumeration of stub
// matchings (undirected) and out->in stub bijections (directed). Adjudicates
// the analytic series and calibrates the Monte Carlo estimator.
//
// Enumeration is the canonical recursive pairing: the lowest-indexed
// unmatched stub is paired against each remaining stub in turn, so each
// matching appears exactly once. Events are decided incrementally; once an
// event holds, the (remaining stubs)-matching count is added in closed form
// instead of descending further. The parallel path distributes the top-level
// branches over OpenMP threads and sums the per-branch counts, which is
// schedule-independent.

#pragma once

#include "configprob/degree_sequence.hpp"
#include "configprob/exact.hpp"
#include "configprob/exec.hpp"

namespace configprob {

struct OracleReport {
    Integer total_configurations;  // (2L-1)!! undirected, L! directed
    Integer favorable;
    Rational probability;  // favorable / total
};

struct OracleCaps {
    long long max_stubs = 14;           // undirected bound on 2L (13!! = 135135)
    long long max_directed_edges = 8;   // directed bound on L (8! = 40320)
};

// Fraction of perfect matchings with at least one stub pair joining m and n.
// Throws Error{TooLarge, SameVertex, VertexOutOfRange}.
OracleReport exact_connection_probability(const DegreeSequence& seq, int m, int n,
                                          const OracleCaps& caps = {},
                                          Exec exec = Exec::serial);

// Fraction of perfect matchings pairing two stubs of s together.
OracleReport exact_self_loop_probability(const DegreeSequence& seq, int s,
                                         const OracleCaps& caps = {},
                                         Exec exec = Exec::serial);

// Fraction of out->in bijections mapping an out-stub of m to an in-stub of n.
OracleReport exact_directed_connection_probability(
    const DirectedDegreeSequence& seq, int m, int n, const OracleCaps& caps = {},
    Exec exec = Exec::serial);

} // namespace configprob
