// Closed-form ensemble quantities for the configuration model: ensemble
// sizes, exact connection/self-loop probabilities via a finite alternating
// series, the first-order (Chung-Lu) approximation, and the directed
// counterparts.
//
// Undirected connection series (P of at least one m-n edge):
//   term_i = (-1)^(i+1) (k_m)_i (k_n)_i / (i! * prod_{j=1..i} (2L-2j+1)),
//   i = 1..min(k_m, k_n, L), with (k)_i the falling factorial.
// Self-loop series at vertex s:
//   term_i = (-1)^(i+1) (k_s)_{2i} / (i! * 2^i * prod_{j=1..i} (2L-2j+1)),
//   i = 1..min(floor(k_s/2), L).
// Directed series (P of at least one m->n edge):
//   term_i = (-1)^(i+1) (k_m^out)_i (k_n^in)_i / (i! * (L)_i),
//   i = 1..min(k_m^out, k_n^in, L).
//
// All three series terminate on their own, so exact rational evaluation is
// the default; a log-space double path takes over past the configured caps.

#pragma once

#include "configprob/degree_sequence.hpp"
#include "configprob/exact.hpp"

#include <vector>

namespace configprob {

struct SeriesMode {
    enum class Kind { full, truncated, paper_literal };

    Kind kind = Kind::full;
    long long order = 0;  // truncated only

    static SeriesMode full() { return {Kind::full, 0}; }
    static SeriesMode truncated(long long r) { return {Kind::truncated, r}; }
    // Two-term truncation as printed in the source formulas. For the
    // undirected pair series the printed second term lacks the 1/2! that the
    // expansion produces, so this mode genuinely differs from truncated(2)
    // there; for self-loops and directed pairs it coincides with truncated(2).
    static SeriesMode paper_literal() { return {Kind::paper_literal, 0}; }
};

struct AnalyticOptions {
    // Exact rational evaluation while i_max <= exact_order_cap and
    // 2L <= exact_stub_cap; otherwise terms are computed as doubles from
    // log-space products (per-term relative error target 1e-12; alternating
    // cancellation in the sum is then the caller's concern).
    long long exact_order_cap = 64;
    long long exact_stub_cap = 1'000'000;
    // Exact ensemble size is materialized while 2L <= ensemble_exact_cap.
    long long ensemble_exact_cap = 64;
};

struct ProbabilityResult {
    Rational value;                    // equals the exact sum of `terms`
    std::vector<Rational> terms;       // signed series terms, term i at [i-1]
    double value_double = 0.0;
    std::vector<double> terms_double;  // double view; sole content if !exact
    long long truncation_order = 0;    // number of series terms summed
    SeriesMode mode;
    bool exact = true;
};

struct EnsembleSize {
    double ln_value = 0.0;
    bool has_exact = false;
    Integer exact_value;  // populated while 2L is under the configured cap
};

// (2L)! / prod_i k_i!   (ordered stub arrangements; all probability ratios
// cancel this normalization).
EnsembleSize ensemble_log_size(const DegreeSequence& seq,
                               const AnalyticOptions& opts = {});

// (L! / prod_i k_i^in!) * (L! / prod_i k_i^out!)
EnsembleSize directed_ensemble_log_size(const DirectedDegreeSequence& seq,
                                        const AnalyticOptions& opts = {});

// P(at least one edge between m and n), m != n.
// Throws Error{SameVertex, VertexOutOfRange}.
ProbabilityResult connection_probability(const DegreeSequence& seq, int m, int n,
                                         SeriesMode mode = SeriesMode::full(),
                                         const AnalyticOptions& opts = {});

// First series term k_m k_n / (2L-1) alone; valid approximation in the sparse
// regime k_m k_n / (2L-1) << 1 and may exceed 1 outside it.
ProbabilityResult connection_probability_sparse(const DegreeSequence& seq, int m,
                                                int n,
                                                const AnalyticOptions& opts = {});

// P(at least one self-loop at s).
ProbabilityResult self_loop_probability(const DegreeSequence& seq, int s,
                                        SeriesMode mode = SeriesMode::full(),
                                        const AnalyticOptions& opts = {});

// P(at least one edge m->n); m == n is a directed self-loop.
ProbabilityResult directed_connection_probability(
    const DirectedDegreeSequence& seq, int m, int n,
    SeriesMode mode = SeriesMode::full(), const AnalyticOptions& opts = {});

// Sum over all targets n of the first-order probability k_m^out k_n^in / L;
// equals k_m^out exactly because the in-degrees sum to L.
Rational expected_degree_identity(const DirectedDegreeSequence& seq, int m);

} // namespace configprob
