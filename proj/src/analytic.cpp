#include "configprob/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace configprob {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " +
                        std::to_string(n) + ")");
}

ProbabilityResult zero_result(SeriesMode mode) {
    ProbabilityResult r;
    r.mode = mode;
    return r;
}

// Term ratio t_i / t_{i-1} as an integer fraction, with t_0 = 1.
struct TermRatio {
    std::function<long long(long long)> num;
    std::function<long long(long long)> den;
};

// Accumulates the alternating series t_1 - t_2 + ... for n_terms terms.
ProbabilityResult accumulate_series(long long n_terms, long long stub_total,
                                    SeriesMode mode, const AnalyticOptions& opts,
                                    const TermRatio& ratio) {
    ProbabilityResult r;
    r.mode = mode;
    r.truncation_order = n_terms;
    r.exact = n_terms <= opts.exact_order_cap && stub_total <= opts.exact_stub_cap;

    if (r.exact) {
        Rational t = 1;
        for (long long i = 1; i <= n_terms; ++i) {
            t *= Rational(Integer(ratio.num(i)), Integer(ratio.den(i)));
            const Rational term = (i % 2 == 1) ? t : Rational(-t);
            r.terms.push_back(term);
            r.value += term;
        }
        r.value_double = to_double(r.value);
        r.terms_double.reserve(r.terms.size());
        for (const auto& term : r.terms) r.terms_double.push_back(to_double(term));
    } else {
        double log_t = 0.0;
        double sum = 0.0;
        for (long long i = 1; i <= n_terms; ++i) {
            log_t += std::log(static_cast<double>(ratio.num(i))) -
                     std::log(static_cast<double>(ratio.den(i)));
            const double term = (i % 2 == 1) ? std::exp(log_t) : -std::exp(log_t);
            r.terms_double.push_back(term);
            sum += term;
        }
        r.value_double = sum;
    }
    return r;
}

long long terms_for_mode(SeriesMode mode, long long full_imax) {
    switch (mode.kind) {
        case SeriesMode::Kind::full: return full_imax;
        case SeriesMode::Kind::truncated:
            return std::min(std::max<long long>(mode.order, 0), full_imax);
        case SeriesMode::Kind::paper_literal:
            return std::min<long long>(2, full_imax);
    }
    return full_imax;
}

EnsembleSize ensemble_from(const double ln_value, long long stub_total,
                           const AnalyticOptions& opts,
                           const std::function<Integer()>& exact) {
    EnsembleSize s;
    s.ln_value = ln_value;
    if (stub_total <= opts.ensemble_exact_cap) {
        s.has_exact = true;
        s.exact_value = exact();
    }
    return s;
}

} // namespace

EnsembleSize ensemble_log_size(const DegreeSequence& seq,
                               const AnalyticOptions& opts) {
    const long long stubs = 2 * seq.edge_count;
    double ln = log_factorial(stubs);
    for (int k : seq.degrees) ln -= log_factorial(k);
    return ensemble_from(ln, stubs, opts, [&] {
        Integer m = factorial(stubs);
        for (int k : seq.degrees) m /= factorial(k);
        return m;
    });
}

EnsembleSize directed_ensemble_log_size(const DirectedDegreeSequence& seq,
                                        const AnalyticOptions& opts) {
    const long long L = seq.edge_count;
    double ln = 2 * log_factorial(L);
    for (int k : seq.in_degrees) ln -= log_factorial(k);
    for (int k : seq.out_degrees) ln -= log_factorial(k);
    return ensemble_from(ln, 2 * L, opts, [&] {
        Integer w_in = factorial(L), w_out = factorial(L);
        for (int k : seq.in_degrees) w_in /= factorial(k);
        for (int k : seq.out_degrees) w_out /= factorial(k);
        return w_in * w_out;
    });
}

ProbabilityResult connection_probability(const DegreeSequence& seq, int m, int n,
                                         SeriesMode mode,
                                         const AnalyticOptions& opts) {
    check_vertex(m, seq.size());
    check_vertex(n, seq.size());
    if (m == n)
        throw Error(ErrorKind::SameVertex,
                    "connection probability needs two distinct vertices; use the "
                    "self-loop operation for vertex " + std::to_string(m));

    const long long km = seq.degrees[m], kn = seq.degrees[n];
    const long long L = seq.edge_count;
    if (km == 0 || kn == 0 || L == 0) return zero_result(mode);

    if (mode.kind == SeriesMode::Kind::paper_literal) {
        // Printed truncation: second term carries no 1/2! factor.
        ProbabilityResult r;
        r.mode = mode;
        r.terms.push_back(make_rational(km * kn, 2 * L - 1));
        const Integer lit_num = Integer(km) * kn * (km - 1) * (kn - 1);
        if (lit_num != 0)
            r.terms.push_back(
                -Rational(lit_num, Integer(2 * L - 1) * (2 * L - 3)));
        for (const auto& term : r.terms) {
            r.value += term;
            r.terms_double.push_back(to_double(term));
        }
        r.value_double = to_double(r.value);
        r.truncation_order = static_cast<long long>(r.terms.size());
        return r;
    }

    const long long full_imax = std::min({km, kn, L});
    return accumulate_series(
        terms_for_mode(mode, full_imax), 2 * L, mode, opts,
        TermRatio{[=](long long i) { return (km - i + 1) * (kn - i + 1); },
                  [=](long long i) { return i * (2 * L - 2 * i + 1); }});
}

ProbabilityResult connection_probability_sparse(const DegreeSequence& seq, int m,
                                                int n,
                                                const AnalyticOptions& opts) {
    return connection_probability(seq, m, n, SeriesMode::truncated(1), opts);
}

ProbabilityResult self_loop_probability(const DegreeSequence& seq, int s,
                                        SeriesMode mode,
                                        const AnalyticOptions& opts) {
    check_vertex(s, seq.size());

    const long long ks = seq.degrees[s];
    const long long L = seq.edge_count;
    if (ks < 2 || L == 0) return zero_result(mode);

    const long long full_imax = std::min(ks / 2, L);
    return accumulate_series(
        terms_for_mode(mode, full_imax), 2 * L, mode, opts,
        TermRatio{[=](long long i) { return (ks - 2 * i + 2) * (ks - 2 * i + 1); },
                  [=](long long i) { return 2 * i * (2 * L - 2 * i + 1); }});
}

ProbabilityResult directed_connection_probability(
    const DirectedDegreeSequence& seq, int m, int n, SeriesMode mode,
    const AnalyticOptions& opts) {
    check_vertex(m, seq.size());
    check_vertex(n, seq.size());

    const long long ko = seq.out_degrees[m], ki = seq.in_degrees[n];
    const long long L = seq.edge_count;
    if (ko == 0 || ki == 0 || L == 0) return zero_result(mode);

    const long long full_imax = std::min({ko, ki, L});
    return accumulate_series(
        terms_for_mode(mode, full_imax), 2 * L, mode, opts,
        TermRatio{[=](long long i) { return (ko - i + 1) * (ki - i + 1); },
                  [=](long long i) { return i * (L - i + 1); }});
}

Rational expected_degree_identity(const DirectedDegreeSequence& seq, int m) {
    check_vertex(m, seq.size());
    const long long L = seq.edge_count;
    const long long ko = seq.out_degrees[m];
    if (L == 0 || ko == 0) return Rational(0);

    Rational sum = 0;
    for (int n = 0; n < seq.size(); ++n)
        sum += make_rational(ko * seq.in_degrees[n], L);
    return sum;
}

} // namespace configprob
