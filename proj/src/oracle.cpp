#include "configprob/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <vector>

namespace configprob {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " +
                        std::to_string(n) + ")");
}

std::vector<int> stub_labels(const std::vector<int>& degrees) {
    std::vector<int> labels;
    for (int v = 0; v < static_cast<int>(degrees.size()); ++v)
        labels.insert(labels.end(), degrees[v], v);
    return labels;
}

// completions[j] = number of perfect matchings of j stubs, j even.
std::vector<Integer> matching_counts(int stubs) {
    std::vector<Integer> counts(stubs + 1, 0);
    counts[0] = 1;
    for (int j = 2; j <= stubs; j += 2) counts[j] = counts[j - 2] * (j - 1);
    return counts;
}

struct PairEvent {
    int a, b;  // unordered label pair; a == b for a self-loop event
    bool hit(int x, int y) const { return (x == a && y == b) || (x == b && y == a); }
};

// Matchings of the unused stubs containing at least one event pair.
Integer count_favorable(const std::vector<int>& labels, std::uint64_t used,
                        int remaining, const PairEvent& event,
                        const std::vector<Integer>& completions) {
    if (remaining < 2) return 0;
    const int u = std::countr_one(used);  // lowest unmatched stub
    const std::uint64_t used_u = used | (1ULL << u);
    Integer favorable = 0;
    for (int v = u + 1; v < static_cast<int>(labels.size()); ++v) {
        if (used_u & (1ULL << v)) continue;
        if (event.hit(labels[u], labels[v]))
            favorable += completions[remaining - 2];
        else if (remaining > 2)
            favorable += count_favorable(labels, used_u | (1ULL << v),
                                         remaining - 2, event, completions);
    }
    return favorable;
}

OracleReport undirected_report(const DegreeSequence& seq, const PairEvent& event,
                               const OracleCaps& caps, Exec exec) {
    const long long stubs = 2 * seq.edge_count;
    if (stubs > caps.max_stubs || stubs > 63)
        throw Error(ErrorKind::TooLarge,
                    "2L = " + std::to_string(stubs) + " exceeds enumeration cap " +
                        std::to_string(std::min<long long>(caps.max_stubs, 63)));

    const std::vector<int> labels = stub_labels(seq.degrees);
    const std::vector<Integer> completions = matching_counts(static_cast<int>(stubs));

    OracleReport report;
    report.total_configurations = completions[stubs];
    if (stubs == 0) {
        report.probability = 0;
        return report;
    }

    if (exec == Exec::serial) {
        report.favorable =
            count_favorable(labels, 0, static_cast<int>(stubs), event, completions);
    } else {
        // One branch per partner of stub 0; branch counts are independent.
        const int nbranch = static_cast<int>(stubs) - 1;
        std::vector<Integer> branch(nbranch);
        #pragma omp parallel for schedule(dynamic)
        for (int v = 1; v <= nbranch; ++v) {
            const std::uint64_t used = 1ULL | (1ULL << v);
            if (event.hit(labels[0], labels[v]))
                branch[v - 1] = completions[stubs - 2];
            else
                branch[v - 1] = count_favorable(labels, used,
                                                static_cast<int>(stubs) - 2, event,
                                                completions);
        }
        for (const auto& b : branch) report.favorable += b;
    }

    report.probability = Rational(report.favorable, report.total_configurations);
    return report;
}

// Bijections of the unused in-stubs onto out-stub positions pos.. containing
// at least one out-stub of m mapped to an in-stub of n.
Integer count_favorable_directed(const std::vector<int>& out_labels,
                                 const std::vector<int>& in_labels, int pos,
                                 std::uint64_t used, int m, int n,
                                 const std::vector<Integer>& factorials) {
    const int L = static_cast<int>(out_labels.size());
    if (pos == L) return 0;
    Integer favorable = 0;
    for (int j = 0; j < L; ++j) {
        if (used & (1ULL << j)) continue;
        if (out_labels[pos] == m && in_labels[j] == n)
            favorable += factorials[L - pos - 1];
        else
            favorable += count_favorable_directed(out_labels, in_labels, pos + 1,
                                                  used | (1ULL << j), m, n,
                                                  factorials);
    }
    return favorable;
}

} // namespace

OracleReport exact_connection_probability(const DegreeSequence& seq, int m, int n,
                                          const OracleCaps& caps, Exec exec) {
    check_vertex(m, seq.size());
    check_vertex(n, seq.size());
    if (m == n)
        throw Error(ErrorKind::SameVertex,
                    "use the self-loop oracle for vertex " + std::to_string(m));
    return undirected_report(seq, PairEvent{m, n}, caps, exec);
}

OracleReport exact_self_loop_probability(const DegreeSequence& seq, int s,
                                         const OracleCaps& caps, Exec exec) {
    check_vertex(s, seq.size());
    return undirected_report(seq, PairEvent{s, s}, caps, exec);
}

OracleReport exact_directed_connection_probability(
    const DirectedDegreeSequence& seq, int m, int n, const OracleCaps& caps,
    Exec exec) {
    check_vertex(m, seq.size());
    check_vertex(n, seq.size());
    const long long L = seq.edge_count;
    if (L > caps.max_directed_edges || L > 63)
        throw Error(ErrorKind::TooLarge,
                    "L = " + std::to_string(L) + " exceeds enumeration cap " +
                        std::to_string(std::min<long long>(caps.max_directed_edges, 63)));

    const std::vector<int> out_labels = stub_labels(seq.out_degrees);
    const std::vector<int> in_labels = stub_labels(seq.in_degrees);
    std::vector<Integer> factorials(L + 1);
    factorials[0] = 1;
    for (long long i = 1; i <= L; ++i) factorials[i] = factorials[i - 1] * i;

    OracleReport report;
    report.total_configurations = factorials[L];
    if (L == 0) {
        report.probability = 0;
        return report;
    }

    if (exec == Exec::serial) {
        report.favorable =
            count_favorable_directed(out_labels, in_labels, 0, 0, m, n, factorials);
    } else {
        // One branch per in-stub assigned to position 0.
        std::vector<Integer> branch(L);
        #pragma omp parallel for schedule(dynamic)
        for (int j = 0; j < static_cast<int>(L); ++j) {
            if (out_labels[0] == m && in_labels[j] == n)
                branch[j] = factorials[L - 1];
            else
                branch[j] = count_favorable_directed(out_labels, in_labels, 1,
                                                     1ULL << j, m, n, factorials);
        }
        for (const auto& b : branch) report.favorable += b;
    }

    report.probability = Rational(report.favorable, report.total_configurations);
    return report;
}

} // namespace configprob
