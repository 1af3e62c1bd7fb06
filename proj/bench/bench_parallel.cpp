// Serial-vs-OpenMP timing for the two parallel kernels: Monte Carlo trial
// loops and oracle branch enumeration. Correctness (equal counts) is asserted
// along the way; the interesting output is the speedup column.
//
// Not registered with ctest — run by hand:  ./bench/bench_parallel

#include "configprob/montecarlo.hpp"
#include "configprob/oracle.hpp"
#include "configprob/sampler.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace configprob;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-34s %10.3fs %10.3fs %7.2fx   %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, equal ? "counts equal" : "COUNT MISMATCH");
    if (!equal) std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    // Scale knob so CI-sized machines can still finish quickly.
    const double scale = argc > 1 ? std::atof(argv[1]) : 1.0;

    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-34s %11s %11s %8s\n", "kernel", "serial", "parallel",
                "speedup");

    // --- Monte Carlo: connection estimate on a mid-size power-law graph.
    {
        const DegreeSequence seq = sample_degree_sequence(
            DegreeDistributionSpec::power_law(2.5, 1, 50), 2000, 99);
        const long long trials = static_cast<long long>(40000 * scale);
        MonteCarloEstimate ser, par;
        const double ts = time_of([&] {
            ser = estimate_connection_probability(seq, 0, 1, trials, 5,
                                                  Exec::serial);
        });
        const double tp = time_of([&] {
            par = estimate_connection_probability(seq, 0, 1, trials, 5,
                                                  Exec::parallel);
        });
        row("monte carlo (N=2000, T=40k)", ts, tp,
            ser.successes == par.successes);
    }

    // --- Monte Carlo: directed variant.
    {
        std::vector<int> io(1000, 2);
        const DirectedDegreeSequence seq = validate_directed(io, io);
        const long long trials = static_cast<long long>(40000 * scale);
        MonteCarloEstimate ser, par;
        const double ts = time_of([&] {
            ser = estimate_directed_connection_probability(seq, 0, 1, trials, 5,
                                                           Exec::serial);
        });
        const double tp = time_of([&] {
            par = estimate_directed_connection_probability(seq, 0, 1, trials, 5,
                                                           Exec::parallel);
        });
        row("monte carlo directed (N=1000)", ts, tp,
            ser.successes == par.successes);
    }

    // --- Oracle: enumeration over 17!! = 34M stub matchings (pruned).
    {
        const DegreeSequence seq = validate_undirected({5, 5, 4, 2, 1, 1});
        OracleCaps caps;
        caps.max_stubs = 18;
        OracleReport ser, par;
        const double ts = time_of([&] {
            ser = exact_connection_probability(seq, 3, 4, caps, Exec::serial);
        });
        const double tp = time_of([&] {
            par = exact_connection_probability(seq, 3, 4, caps, Exec::parallel);
        });
        row("oracle pair (2L=18)", ts, tp,
            ser.favorable == par.favorable &&
                ser.total_configurations == par.total_configurations);
    }

    // --- Oracle: directed enumeration at the top of the raised cap.
    {
        std::vector<int> io(5, 2);
        const DirectedDegreeSequence seq = validate_directed(io, io);
        OracleCaps caps;
        caps.max_directed_edges = 10;
        OracleReport ser, par;
        const double ts = time_of([&] {
            ser = exact_directed_connection_probability(seq, 0, 1, caps,
                                                        Exec::serial);
        });
        const double tp = time_of([&] {
            par = exact_directed_connection_probability(seq, 0, 1, caps,
                                                        Exec::parallel);
        });
        row("oracle directed (L=10)", ts, tp,
            ser.favorable == par.favorable &&
                ser.total_configurations == par.total_configurations);
    }

    return 0;
}
