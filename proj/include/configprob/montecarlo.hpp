// Empirical connection/self-loop frequencies over repeated configuration
// samples. Trial t draws its own generator from
// derive_seed(master_seed, t), so trials are order-independent: the OpenMP
// path and the serial reference produce identical success counts.

#pragma once

#include "configprob/degree_sequence.hpp"
#include "configprob/exec.hpp"

#include <cstdint>
#include <string>

namespace configprob {

struct MonteCarloEstimate {
    std::string event;
    long long trials = 0;
    long long successes = 0;
    double p_hat = 0.0;
    // Normal-approximation standard error sqrt(p(1-p)/T). When every trial
    // agrees (successes 0 or T) this would be a misleading 0, so the field
    // instead reports the one-sided 95% Clopper-Pearson interval width
    // 1 - 0.05^(1/T); `degenerate` marks that case.
    double std_error = 0.0;
    bool degenerate = false;
};

// P(multiplicity(m, n) >= 1) over `trials` samples. Throws
// Error{SameVertex, VertexOutOfRange, InvalidSpec on trials < 1}.
//
// `first_trial` shifts the global trial-index window to
// [first_trial, first_trial + trials): running B disjoint windows and adding
// the success counts reproduces one run over the union exactly, which is how
// work can be sharded across processes without touching the statistics.
MonteCarloEstimate estimate_connection_probability(
    const DegreeSequence& seq, int m, int n, long long trials,
    std::uint64_t seed, Exec exec = Exec::parallel, long long first_trial = 0);

MonteCarloEstimate estimate_self_loop_probability(
    const DegreeSequence& seq, int s, long long trials, std::uint64_t seed,
    Exec exec = Exec::parallel, long long first_trial = 0);

MonteCarloEstimate estimate_directed_connection_probability(
    const DirectedDegreeSequence& seq, int m, int n, long long trials,
    std::uint64_t seed, Exec exec = Exec::parallel, long long first_trial = 0);

} // namespace configprob
