#include "configprob/degree_sequence.hpp"

#include "configprob/rng.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace configprob {

DegreeSequence validate_undirected(const std::vector<int>& raw) {
    long long total = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0)
            throw Error(ErrorKind::NegativeDegree,
                        "vertex " + std::to_string(i) + " has degree " +
                            std::to_string(raw[i]));
        total += raw[i];
    }
    if (total % 2 != 0)
        throw Error(ErrorKind::OddStubTotal,
                    "stub total " + std::to_string(total) +
                        " is odd; no stub matching exists");
    return DegreeSequence{raw, total / 2};
}

DirectedDegreeSequence validate_directed(const std::vector<int>& in_raw,
                                         const std::vector<int>& out_raw) {
    if (in_raw.size() != out_raw.size())
        throw Error(ErrorKind::LengthMismatch,
                    "in list has " + std::to_string(in_raw.size()) +
                        " entries, out list has " + std::to_string(out_raw.size()));
    long long in_total = 0, out_total = 0;
    for (std::size_t i = 0; i < in_raw.size(); ++i) {
        if (in_raw[i] < 0 || out_raw[i] < 0)
            throw Error(ErrorKind::NegativeDegree,
                        "vertex " + std::to_string(i) + " has a negative degree");
        in_total += in_raw[i];
        out_total += out_raw[i];
    }
    if (in_total != out_total)
        throw Error(ErrorKind::UnbalancedStubs,
                    "sum(in) = " + std::to_string(in_total) +
                        " but sum(out) = " + std::to_string(out_total));
    return DirectedDegreeSequence{in_raw, out_raw, in_total};
}

DegreeDistributionSpec DegreeDistributionSpec::constant(int k) {
    DegreeDistributionSpec s;
    s.kind = Kind::constant;
    s.constant_k = k;
    return s;
}

DegreeDistributionSpec DegreeDistributionSpec::poisson(double mean) {
    DegreeDistributionSpec s;
    s.kind = Kind::poisson;
    s.poisson_mean = mean;
    return s;
}

DegreeDistributionSpec DegreeDistributionSpec::power_law(double gamma, int k_min,
                                                         int k_max) {
    DegreeDistributionSpec s;
    s.kind = Kind::power_law;
    s.gamma = gamma;
    s.k_min = k_min;
    s.k_max = k_max;
    return s;
}

namespace {

void check_spec(const DegreeDistributionSpec& spec) {
    using Kind = DegreeDistributionSpec::Kind;
    switch (spec.kind) {
        case Kind::constant:
            if (spec.constant_k < 0)
                throw Error(ErrorKind::InvalidSpec, "constant degree must be >= 0");
            break;
        case Kind::poisson:
            if (!(spec.poisson_mean > 0))
                throw Error(ErrorKind::InvalidSpec, "poisson mean must be > 0");
            break;
        case Kind::power_law:
            if (!(spec.gamma > 1))
                throw Error(ErrorKind::InvalidSpec, "power-law exponent must be > 1");
            if (spec.k_min < 1 || spec.k_min > spec.k_max)
                throw Error(ErrorKind::InvalidSpec,
                            "power-law requires 1 <= k_min <= k_max");
            break;
    }
}

// Poisson draw by inversion with the pmf recurrence p(k+1) = p(k)*mean/(k+1).
// Pinned here (instead of std::poisson_distribution) so sequences reproduce
// across standard libraries. Walk capped far in the upper tail.
int poisson_inverse(double mean, double u) {
    const long long cap =
        static_cast<long long>(mean + 20.0 * std::sqrt(mean) + 200.0);
    long double p = std::exp(static_cast<long double>(-mean));
    long double cumulative = p;
    long long k = 0;
    while (u >= static_cast<double>(cumulative) && k < cap) {
        ++k;
        p *= mean / static_cast<long double>(k);
        cumulative += p;
    }
    return static_cast<int>(k);
}

// Cumulative table for the truncated power law P(k) proportional to k^-gamma
// on [k_min, k_max]; inverse transform over the finite support is exact.
std::vector<double> power_law_cumulative(const DegreeDistributionSpec& spec) {
    std::vector<double> cumulative;
    cumulative.reserve(spec.k_max - spec.k_min + 1);
    double sum = 0;
    for (int k = spec.k_min; k <= spec.k_max; ++k) {
        sum += std::pow(static_cast<double>(k), -spec.gamma);
        cumulative.push_back(sum);
    }
    for (double& c : cumulative) c /= sum;
    cumulative.back() = 1.0;
    return cumulative;
}

} // namespace

DegreeSequence sample_degree_sequence(const DegreeDistributionSpec& spec, int n,
                                      std::uint64_t seed) {
    using Kind = DegreeDistributionSpec::Kind;
    check_spec(spec);
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "vertex count must be >= 1");

    Xoshiro256 rng(seed);
    std::vector<int> degrees(n);
    std::vector<double> cumulative;
    if (spec.kind == Kind::power_law) cumulative = power_law_cumulative(spec);

    long long total = 0;
    for (int i = 0; i < n; ++i) {
        int k = 0;
        switch (spec.kind) {
            case Kind::constant:
                k = spec.constant_k;
                break;
            case Kind::poisson:
                k = poisson_inverse(spec.poisson_mean, rng.uniform01());
                break;
            case Kind::power_law: {
                const double u = rng.uniform01();
                const auto it =
                    std::lower_bound(cumulative.begin(), cumulative.end(), u);
                k = spec.k_min + static_cast<int>(it - cumulative.begin());
                break;
            }
        }
        degrees[i] = k;
        total += k;
    }

    if (total % 2 != 0) {
        // Parity repair: bump one uniformly chosen vertex. Under power_law the
        // choice is redrawn while the pick sits at k_max; if everyone is at
        // k_max the bump is impossible, so decrement one vertex instead.
        const bool capped = spec.kind == Kind::power_law;
        bool all_at_cap = false;
        if (capped) {
            all_at_cap = std::all_of(degrees.begin(), degrees.end(),
                                     [&](int k) { return k >= spec.k_max; });
        }
        for (;;) {
            const int v = static_cast<int>(rng.uniform_below(n));
            if (all_at_cap) {
                degrees[v] -= 1;
                break;
            }
            if (capped && degrees[v] >= spec.k_max) continue;
            degrees[v] += 1;
            break;
        }
    }

    return validate_undirected(degrees);
}

namespace {

[[noreturn]] void parse_fail(const std::string& name, std::size_t line,
                             const std::string& what) {
    throw Error(ErrorKind::ParseError,
                name + ":" + std::to_string(line) + ": " + what);
}

bool skippable(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

} // namespace

DegreeSequence read_degree_file(std::istream& in, const std::string& name) {
    std::vector<int> degrees;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream ss(line);
        long long k;
        if (!(ss >> k)) parse_fail(name, lineno, "expected an integer degree");
        std::string extra;
        if (ss >> extra) parse_fail(name, lineno, "trailing content '" + extra + "'");
        if (k < 0 || k > std::numeric_limits<int>::max())
            parse_fail(name, lineno, "degree " + std::to_string(k) + " out of range");
        degrees.push_back(static_cast<int>(k));
    }
    if (degrees.empty()) throw Error(ErrorKind::ParseError, name + ": no degrees found");
    return validate_undirected(degrees);
}

DirectedDegreeSequence read_directed_degree_file(std::istream& in,
                                                 const std::string& name) {
    std::vector<int> in_degrees, out_degrees;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream ss(line);
        long long kin, kout;
        if (!(ss >> kin >> kout))
            parse_fail(name, lineno, "expected two integers: 'in out'");
        std::string extra;
        if (ss >> extra) parse_fail(name, lineno, "trailing content '" + extra + "'");
        if (kin < 0 || kout < 0 || kin > std::numeric_limits<int>::max() ||
            kout > std::numeric_limits<int>::max())
            parse_fail(name, lineno, "degree out of range");
        in_degrees.push_back(static_cast<int>(kin));
        out_degrees.push_back(static_cast<int>(kout));
    }
    if (in_degrees.empty())
        throw Error(ErrorKind::ParseError, name + ": no degrees found");
    return validate_directed(in_degrees, out_degrees);
}

void write_degree_file(std::ostream& out, const DegreeSequence& seq) {
    for (int k : seq.degrees) out << k << "\n";
}

void write_directed_degree_file(std::ostream& out,
                                const DirectedDegreeSequence& seq) {
    for (int i = 0; i < seq.size(); ++i)
        out << seq.in_degrees[i] << " " << seq.out_degrees[i] << "\n";
}

} // namespace configprob
