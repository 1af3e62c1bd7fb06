// Validated degree sequences (undirected and directed) and degree-sequence
// sampling from standard distributions. Vertex labels are 0-based everywhere.

#pragma once

#include "configprob/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace configprob {

struct DegreeSequence {
    std::vector<int> degrees;  // stub counts, indexed by vertex
    long long edge_count = 0;  // L = sum(degrees) / 2

    int size() const { return static_cast<int>(degrees.size()); }
};

struct DirectedDegreeSequence {
    std::vector<int> in_degrees;
    std::vector<int> out_degrees;
    long long edge_count = 0;  // L = sum(in) = sum(out)

    int size() const { return static_cast<int>(in_degrees.size()); }
};

// Checks nonnegativity and stub-parity; computes L.
// Throws Error{NegativeDegree, OddStubTotal}.
DegreeSequence validate_undirected(const std::vector<int>& raw);

// Checks nonnegativity, equal lengths and in/out stub balance.
// Throws Error{NegativeDegree, LengthMismatch, UnbalancedStubs}.
DirectedDegreeSequence validate_directed(const std::vector<int>& in_raw,
                                         const std::vector<int>& out_raw);

struct DegreeDistributionSpec {
    enum class Kind { constant, poisson, power_law };

    Kind kind = Kind::constant;
    int constant_k = 0;      // constant
    double poisson_mean = 0; // poisson, > 0
    double gamma = 0;        // power_law, > 1
    int k_min = 1;           // power_law, 1 <= k_min <= k_max
    int k_max = 1;

    static DegreeDistributionSpec constant(int k);
    static DegreeDistributionSpec poisson(double mean);
    static DegreeDistributionSpec power_law(double gamma, int k_min, int k_max);
};

// Draws n degrees i.i.d. from the spec, then repairs parity if the stub total
// is odd: one uniformly chosen vertex gets +1 (for power_law the choice is
// redrawn while the chosen vertex already sits at k_max; if every vertex is
// at k_max, one vertex gets -1 instead). Deterministic in (spec, n, seed).
// Throws Error{InvalidSpec}.
DegreeSequence sample_degree_sequence(const DegreeDistributionSpec& spec, int n,
                                      std::uint64_t seed);

// Degree files: one integer per line (undirected) or "in out" per line
// (directed); lines starting with '#' are ignored. Parse errors carry
// 1-based line numbers.
DegreeSequence read_degree_file(std::istream& in, const std::string& name);
DirectedDegreeSequence read_directed_degree_file(std::istream& in,
                                                 const std::string& name);
void write_degree_file(std::ostream& out, const DegreeSequence& seq);
void write_directed_degree_file(std::ostream& out,
                                const DirectedDegreeSequence& seq);

} // namespace configprob
