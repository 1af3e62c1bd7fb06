// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria pit independently derived answers against each other
// (series vs enumeration vs sampling); nothing here is tautological.
//
// Runtime budget:  criterion 1 < 60 s, criterion 8a < 30 s (both timed and
// enforced below); the whole binary typically finishes well under that.

#include "configprob/analytic.hpp"
#include "configprob/montecarlo.hpp"
#include "configprob/multigraph.hpp"
#include "configprob/oracle.hpp"
#include "configprob/rng.hpp"
#include "configprob/sampler.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace configprob;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every non-increasing degree tuple with 2 <= N <= 6, k_i <= 5, even stub
// total <= 12 (plus the all-zero tuples). Non-increasing representatives are
// enough: probabilities are label-covariant, which test_oracle pins separately.
std::vector<std::vector<int>> undirected_sweep() {
    std::vector<std::vector<int>> out;
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> ks(n, 0);
        const std::function<void(int, int, long long)> rec =
            [&](int pos, int max_k, long long sum) {
                if (pos == n) {
                    if (sum % 2 == 0 && sum <= 12) out.push_back(ks);
                    return;
                }
                for (int k = 0; k <= max_k && sum + k <= 12; ++k) {
                    ks[pos] = k;
                    rec(pos + 1, k, sum + k);
                }
            };
        rec(0, 5, 0);
    }
    return out;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CONFIGPROB_CLI_PATH) + " " + args + " 2>&1";
    CliResult r;
    std::array<char, 4096> buf{};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

// ---------------------------------------------------------------------------

void criterion_1_series_vs_oracle() {
    const auto t0 = Clock::now();
    const auto sweep = undirected_sweep();
    long long sequences = 0, pair_checks = 0;
    std::string first_mismatch;

    for (const auto& ks : sweep) {
        const DegreeSequence s = validate_undirected(ks);
        ++sequences;
        for (int m = 0; m < s.size() && first_mismatch.empty(); ++m) {
            for (int n = m + 1; n < s.size(); ++n) {
                const ProbabilityResult series = connection_probability(s, m, n);
                const OracleReport oracle =
                    exact_connection_probability(s, m, n, {}, Exec::serial);
                ++pair_checks;
                if (!series.exact || series.value != oracle.probability) {
                    std::ostringstream why;
                    why << "mismatch at ks=[";
                    for (int k : ks) why << k << " ";
                    why << "] pair (" << m << "," << n << ")";
                    first_mismatch = why.str();
                    break;
                }
            }
        }
        if (!first_mismatch.empty()) break;
    }

    // Frozen witness on top of the sweep.
    const bool witness =
        connection_probability(validate_undirected({2, 2, 1, 1}), 0, 1).value ==
        make_rational(2, 3);

    const double dt = seconds_since(t0);
    std::ostringstream detail;
    detail << "series == oracle on " << pair_checks << " pairs over " << sequences
           << " sequences (N<=6, 2L<=12), witness [2,2,1,1](0,1)=2/3, "
           << std::fixed << dt << "s";
    if (!first_mismatch.empty()) detail << "; " << first_mismatch;
    report(1, first_mismatch.empty() && witness && sequences >= 200 && dt < 60.0,
           detail.str());
}

void criterion_2_self_loops() {
    const auto sweep = undirected_sweep();
    long long checks = 0;
    bool ok = true;
    std::string why;

    for (const auto& ks : sweep) {
        const DegreeSequence s = validate_undirected(ks);
        const long long twoL = 2 * s.edge_count;
        for (int v = 0; v < s.size() && ok; ++v) {
            const ProbabilityResult series = self_loop_probability(s, v);
            const OracleReport oracle =
                exact_self_loop_probability(s, v, {}, Exec::serial);
            ++checks;
            if (!series.exact || series.value != oracle.probability) {
                ok = false;
                why = "series != oracle";
                break;
            }
            // Leading term must be k(k-1)/(2(2L-1)) verbatim.
            const long long k = ks[v];
            const Rational want =
                (k >= 2 && twoL >= 2) ? make_rational(k * (k - 1), 2 * (twoL - 1))
                                      : Rational(0);
            const Rational got = series.terms.empty() ? Rational(0)
                                                      : series.terms.front();
            if (got != want) {
                ok = false;
                why = "leading term != k(k-1)/(2(2L-1))";
                break;
            }
        }
        if (!ok) break;
    }

    const bool witness =
        self_loop_probability(validate_undirected({2, 1, 1}), 0).value ==
        make_rational(1, 3);

    std::ostringstream detail;
    detail << "self-loop series == oracle and leading-term formula on " << checks
           << " vertices, witness [2,1,1] s=0 -> 1/3";
    if (!ok) detail << "; " << why;
    report(2, ok && witness, detail.str());
}

void criterion_3_directed() {
    long long checks = 0;
    bool ok = true;
    std::string why;

    // Exhaustive balanced in/out tuples: N<=3 with degrees<=3, N=4 with
    // degrees<=2, N=5 with degrees<=1; L capped at 6 throughout.
    const auto sweep_side = [](int n, int kmax) {
        std::vector<std::vector<int>> tuples;
        std::vector<int> t(n, 0);
        while (true) {
            tuples.push_back(t);
            int i = 0;
            while (i < n && t[i] == kmax) t[i++] = 0;
            if (i == n) break;
            ++t[i];
        }
        return tuples;
    };

    const auto check_all = [&](int n, int kmax) {
        const auto tuples = sweep_side(n, kmax);
        for (const auto& out : tuples) {
            const long long lo = std::accumulate(out.begin(), out.end(), 0LL);
            if (lo < 1 || lo > 6) continue;
            for (const auto& in : tuples) {
                const long long li = std::accumulate(in.begin(), in.end(), 0LL);
                if (li != lo) continue;
                const DirectedDegreeSequence s = validate_directed(in, out);
                for (int a = 0; a < n && ok; ++a)
                    for (int b = 0; b < n; ++b) {
                        const ProbabilityResult series =
                            directed_connection_probability(s, a, b);
                        const OracleReport oracle =
                            exact_directed_connection_probability(s, a, b, {},
                                                                  Exec::serial);
                        ++checks;
                        if (!series.exact ||
                            series.value != oracle.probability) {
                            ok = false;
                            std::ostringstream w;
                            w << "mismatch n=" << n << " pair " << a << "->" << b;
                            why = w.str();
                            break;
                        }
                    }
                if (!ok) return;
            }
        }
    };

    check_all(2, 3);
    check_all(3, 3);
    check_all(4, 2);
    check_all(5, 1);

    const bool witness = directed_connection_probability(
                             validate_directed({1, 1}, {1, 1}), 0, 1)
                             .value == make_rational(1, 2);

    std::ostringstream detail;
    detail << "directed series == oracle on " << checks
           << " ordered pairs (self-pairs included), witness "
              "out=[1,1],in=[1,1] 0->1 = 1/2";
    if (!ok) detail << "; " << why;
    report(3, ok && witness, detail.str());
}

void criterion_4_paper_literal() {
    const DegreeSequence s = validate_undirected({2, 2, 1, 1});
    const Rational lit =
        connection_probability(s, 0, 1, SeriesMode::paper_literal()).value;
    const Rational oracle =
        exact_connection_probability(s, 0, 1).probability;
    const bool values_ok = lit == make_rational(8, 15) &&
                           oracle == make_rational(2, 3) && lit != oracle;

    // The shipped report must flag it too.
    fs::path dir = fs::temp_directory_path() / "configprob_acceptance";
    fs::create_directories(dir);
    const std::string deg = (dir / "deg2211.txt").string();
    std::ofstream(deg) << "2\n2\n1\n1\n";
    const CliResult r = run_cli("verify --degrees " + deg +
                                " --pair 0 1 --trials 4000 --seed 0 --format csv");
    const bool flagged = r.output.find("8/15,true") != std::string::npos;

    std::ostringstream detail;
    detail << "paper-literal 8/15 vs oracle 2/3 on [2,2,1,1](0,1); verify row "
           << (flagged ? "flags" : "DOES NOT flag") << " the difference";
    report(4, values_ok && flagged && r.exit_code == 0, detail.str());
}

void criterion_5_sparse_limit() {
    Xoshiro256 rng(8088);
    long long sequences = 0, pairs = 0;
    bool ok = true;

    while (sequences < 100) {
        const int n = 400 + static_cast<int>(rng.uniform_below(400));
        std::vector<int> ks(n);
        long long total = 0;
        for (int& k : ks) {
            k = 1 + static_cast<int>(rng.uniform_below(3)); // degrees 1..3
            total += k;
        }
        if (total % 2 != 0) {
            ++ks[0];
            ++total;
        }
        const DegreeSequence s = validate_undirected(ks);
        ++sequences;

        for (int rep = 0; rep < 5; ++rep) {
            const int m = static_cast<int>(rng.uniform_below(n));
            int v = static_cast<int>(rng.uniform_below(n));
            if (v == m) v = (m + 1) % n;
            // Sparse-regime guard, exact: k_m k_v * 100 <= 2L - 1.
            if (Integer(ks[m]) * ks[v] * 100 > Integer(total - 1)) continue;

            const Rational full = connection_probability(s, m, v).value;
            const Rational first = connection_probability_sparse(s, m, v).value;
            ++pairs;
            // |full - first| / full <= 1/50, in exact arithmetic.
            const Rational dev = abs(full - first);
            if (dev * 50 > full) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
    }

    std::ostringstream detail;
    detail << "sparse first-order within 2% of full on " << pairs
           << " pairs across " << sequences
           << " random sequences (k_m k_n/(2L-1) <= 0.01, exact arithmetic)";
    report(5, ok && sequences >= 100 && pairs >= 100, detail.str());
}

void criterion_6_ensemble_sizes() {
    const EnsembleSize a = ensemble_log_size(validate_undirected({1, 1}));
    const EnsembleSize b = ensemble_log_size(validate_undirected({2, 2, 1, 1}));
    const EnsembleSize c =
        directed_ensemble_log_size(validate_directed({1, 1}, {1, 1}));
    const bool ok = a.has_exact && a.exact_value == 2 && b.has_exact &&
                    b.exact_value == 180 && c.has_exact && c.exact_value == 4;
    report(6, ok,
           "ensemble sizes: [1,1] -> 2, [2,2,1,1] -> 180, directed "
           "in=out=[1,1] -> 4 (exact integers)");
}

void criterion_7_expected_degree_identity() {
    Xoshiro256 rng(515);
    long long checks = 0;
    bool ok = true;

    for (int t = 0; t < 100 && ok; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));
        std::vector<int> out(n), in(n, 0);
        long long total = 0;
        for (int& k : out) {
            k = static_cast<int>(rng.uniform_below(6));
            total += k;
        }
        for (long long u = 0; u < total; ++u)
            ++in[static_cast<std::size_t>(rng.uniform_below(n))];
        const DirectedDegreeSequence s = validate_directed(in, out);
        if (s.edge_count == 0) continue;
        for (int m = 0; m < n; ++m) {
            ++checks;
            if (expected_degree_identity(s, m) !=
                make_rational(out[m], 1)) {
                ok = false;
                break;
            }
        }
    }

    std::ostringstream detail;
    detail << "sum_n k_out(m) k_in(n) / L == k_out(m) exactly on " << checks
           << " vertices over random directed sequences";
    report(7, ok && checks >= 100, detail.str());
}

void criterion_8_sampler() {
    // (a) degree preservation at scale, timed.
    const auto t0 = Clock::now();
    const DegreeSequence big = sample_degree_sequence(
        DegreeDistributionSpec::power_law(2.5, 1, 100), 1000, 2026);
    bool preserved = true;
    for (std::uint64_t r = 0; r < 1000 && preserved; ++r) {
        const MultiGraph g = sample_configuration(big, r);
        preserved = g.degrees() == big.degrees;
    }
    const double dt = seconds_since(t0);
    {
        std::ostringstream detail;
        detail << "8a: degrees preserved exactly over 1000 samples of an "
                  "N=1000 power-law sequence, "
               << std::fixed << dt << "s";
        report(8, preserved && dt < 30.0, detail.str());
    }

    // (b) Monte Carlo lands within 4 sigma of the enumerated value.
    const DegreeSequence s = validate_undirected({2, 2, 1, 1});
    const MonteCarloEstimate est =
        estimate_connection_probability(s, 0, 1, 1000000, 1);
    const double exact = 2.0 / 3.0;
    const double dev = std::abs(est.p_hat - exact);
    {
        std::ostringstream detail;
        detail << "8b: [2,2,1,1](0,1) T=1e6 seed=1: |" << est.p_hat << " - 2/3| = "
               << dev << " <= 4*se = " << 4.0 * est.std_error;
        report(8, dev <= 4.0 * est.std_error, detail.str());
    }

    // (c) chi-square against the exact matching distribution. The 15 equally
    // likely stub matchings of [2,2,1,1] collapse onto 6 observable
    // multigraphs with weights {1,2,2,4,4,2}/15; uniformity over matchings is
    // accepted iff the category counts fit those weights (dof 5, significance
    // 1e-4 -> threshold 25.744831959).
    using Edges = std::vector<std::pair<int, int>>;
    const std::vector<std::pair<Edges, int>> classes = {
        {{{0, 0}, {1, 1}, {2, 3}}, 1}, {{{0, 0}, {1, 2}, {1, 3}}, 2},
        {{{0, 1}, {0, 1}, {2, 3}}, 2}, {{{0, 1}, {0, 2}, {1, 3}}, 4},
        {{{0, 1}, {0, 3}, {1, 2}}, 4}, {{{0, 2}, {0, 3}, {1, 1}}, 2},
    };
    const long long trials = 1000000;
    std::map<Edges, long long> counts;
    for (long long t = 0; t < trials; ++t)
        ++counts[sample_configuration(s, derive_seed(1, t)).edges];

    bool classes_ok = counts.size() == classes.size();
    double chi2 = 0.0;
    for (const auto& [edges, weight] : classes) {
        const double expected = static_cast<double>(trials) * weight / 15.0;
        const auto it = counts.find(edges);
        const double observed =
            it == counts.end() ? 0.0 : static_cast<double>(it->second);
        if (it == counts.end()) classes_ok = false;
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    const double threshold = 25.74483195905612; // chi2 quantile 1-1e-4, dof 5
    {
        std::ostringstream detail;
        detail << "8c: matching-distribution chi-square = " << chi2 << " < "
               << threshold << " (dof 5, T=1e6, seed 1)";
        report(8, classes_ok && chi2 < threshold, detail.str());
    }
}

void criterion_9_determinism() {
    fs::path dir = fs::temp_directory_path() / "configprob_acceptance";
    fs::create_directories(dir);
    const std::string deg = (dir / "deg_det.txt").string();
    std::ofstream(deg) << "3\n2\n2\n1\n1\n1\n";

    const std::string g1 = (dir / "g1.txt").string();
    const std::string g2 = (dir / "g2.txt").string();
    const CliResult r1 =
        run_cli("generate --degrees " + deg + " --seed 11 --out " + g1);
    const CliResult r2 =
        run_cli("generate --degrees " + deg + " --seed 11 --out " + g2);
    const bool gen_ok = r1.exit_code == 0 && r2.exit_code == 0 &&
                        !slurp(g1).empty() && slurp(g1) == slurp(g2);

    const std::string v1 = (dir / "v1.json").string();
    const std::string v2 = (dir / "v2.json").string();
    const std::string vcmd = "verify --degrees " + deg +
                             " --trials 1500 --seed 7 --format json --out ";
    const CliResult s1 = run_cli(vcmd + v1);
    const CliResult s2 = run_cli(vcmd + v2);
    const bool ver_ok = s1.exit_code == 0 && s2.exit_code == 0 &&
                        !slurp(v1).empty() && slurp(v1) == slurp(v2);

    report(9, gen_ok && ver_ok,
           "generate edge lists and verify JSON reports byte-identical across "
           "reruns");
}

void criterion_10_cli_contract() {
    fs::path dir = fs::temp_directory_path() / "configprob_acceptance";
    fs::create_directories(dir);

    const std::string good = (dir / "good.txt").string();
    std::ofstream(good) << "2\n2\n1\n1\n";
    const std::string odd = (dir / "odd.txt").string();
    std::ofstream(odd) << "1\n1\n1\n";

    const CliResult ok = run_cli("prob --degrees " + good + " --pair 0 1");
    const CliResult rejected = run_cli("prob --degrees " + odd + " --pair 0 1");
    // Frozen witness for the FAIL path: seed 1335 at 60 trials puts the
    // pair(0,1) estimate ~4.5 sigma high (found by search, deterministic).
    const CliResult fail = run_cli("verify --degrees " + good +
                                   " --pair 0 1 --trials 60 --seed 1335");

    const bool pass = ok.exit_code == 0 && rejected.exit_code == 1 &&
                      rejected.output.find("OddStubTotal") != std::string::npos &&
                      fail.exit_code == 2;

    std::ostringstream detail;
    detail << "exit codes: success=" << ok.exit_code
           << ", OddStubTotal rejection=" << rejected.exit_code
           << ", verify FAIL=" << fail.exit_code << " (want 0/1/2)";
    report(10, pass, detail.str());
}

} // namespace

int main() {
    std::printf("configprob acceptance suite\n");

    criterion_1_series_vs_oracle();
    criterion_2_self_loops();
    criterion_3_directed();
    criterion_4_paper_literal();
    criterion_5_sparse_limit();
    criterion_6_ensemble_sizes();
    criterion_7_expected_degree_identity();
    criterion_8_sampler();
    criterion_9_determinism();
    criterion_10_cli_contract();

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion check(s) FAILED\n", g_failures);
    return 1;
}
