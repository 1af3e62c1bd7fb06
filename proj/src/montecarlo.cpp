#include "configprob/montecarlo.hpp"

#include "configprob/rng.hpp"
#include "configprob/sampler.hpp"

#include <cmath>

namespace configprob {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " +
                        std::to_string(n) + ")");
}

void check_trials(long long trials) {
    if (trials < 1) throw Error(ErrorKind::InvalidSpec, "trials must be >= 1");
}

template <typename TrialFn>
MonteCarloEstimate run_trials(std::string event, long long trials,
                              std::uint64_t seed, Exec exec,
                              long long first_trial, TrialFn trial) {
    const long long end = first_trial + trials;
    long long successes = 0;
    if (exec == Exec::parallel) {
        #pragma omp parallel for reduction(+ : successes) schedule(static)
        for (long long t = first_trial; t < end; ++t)
            successes += trial(derive_seed(seed, static_cast<std::uint64_t>(t)));
    } else {
        for (long long t = first_trial; t < end; ++t)
            successes += trial(derive_seed(seed, static_cast<std::uint64_t>(t)));
    }

    MonteCarloEstimate est;
    est.event = std::move(event);
    est.trials = trials;
    est.successes = successes;
    est.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    est.degenerate = (successes == 0 || successes == trials);
    if (est.degenerate)
        est.std_error = 1.0 - std::pow(0.05, 1.0 / static_cast<double>(trials));
    else
        est.std_error = std::sqrt(est.p_hat * (1.0 - est.p_hat) /
                                  static_cast<double>(trials));
    return est;
}

} // namespace

MonteCarloEstimate estimate_connection_probability(const DegreeSequence& seq,
                                                   int m, int n, long long trials,
                                                   std::uint64_t seed, Exec exec,
                                                   long long first_trial) {
    check_vertex(m, seq.size());
    check_vertex(n, seq.size());
    if (m == n)
        throw Error(ErrorKind::SameVertex,
                    "use the self-loop estimator for vertex " + std::to_string(m));
    check_trials(trials);
    return run_trials("pair(" + std::to_string(m) + "," + std::to_string(n) + ")",
                      trials, seed, exec, first_trial, [&](std::uint64_t s) {
                          return sample_configuration(seq, s).multiplicity(m, n) >= 1
                                     ? 1
                                     : 0;
                      });
}

MonteCarloEstimate estimate_self_loop_probability(const DegreeSequence& seq,
                                                  int s, long long trials,
                                                  std::uint64_t seed, Exec exec,
                                                  long long first_trial) {
    check_vertex(s, seq.size());
    check_trials(trials);
    return run_trials("self(" + std::to_string(s) + ")", trials, seed, exec,
                      first_trial, [&](std::uint64_t sd) {
                          return sample_configuration(seq, sd).multiplicity(s, s) >= 1
                                     ? 1
                                     : 0;
                      });
}

MonteCarloEstimate estimate_directed_connection_probability(
    const DirectedDegreeSequence& seq, int m, int n, long long trials,
    std::uint64_t seed, Exec exec, long long first_trial) {
    check_vertex(m, seq.size());
    check_vertex(n, seq.size());
    check_trials(trials);
    return run_trials(
        "dir(" + std::to_string(m) + "->" + std::to_string(n) + ")", trials, seed,
        exec, first_trial, [&](std::uint64_t s) {
            return sample_directed_configuration(seq, s).multiplicity(m, n) >= 1 ? 1
                                                                                 : 0;
        });
}

} // namespace configprob
