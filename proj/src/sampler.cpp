#include "configprob/sampler.hpp"

#include "configprob/rng.hpp"

#include <algorithm>

namespace configprob {

namespace {

std::vector<int> stub_array(const std::vector<int>& degrees) {
    std::vector<int> stubs;
    long long total = 0;
    for (int k : degrees) total += k;
    stubs.reserve(static_cast<std::size_t>(total));
    for (int v = 0; v < static_cast<int>(degrees.size()); ++v)
        stubs.insert(stubs.end(), degrees[v], v);
    return stubs;
}

} // namespace

MultiGraph sample_configuration(const DegreeSequence& seq, std::uint64_t seed) {
    MultiGraph g;
    g.n = seq.size();
    g.directed = false;

    std::vector<int> stubs = stub_array(seq.degrees);
    Xoshiro256 rng(seed);
    shuffle(stubs, rng);

    g.edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

MultiGraph sample_directed_configuration(const DirectedDegreeSequence& seq,
                                         std::uint64_t seed) {
    MultiGraph g;
    g.n = seq.size();
    g.directed = true;

    const std::vector<int> out_stubs = stub_array(seq.out_degrees);
    std::vector<int> in_stubs = stub_array(seq.in_degrees);
    Xoshiro256 rng(seed);
    shuffle(in_stubs, rng);

    g.edges.reserve(out_stubs.size());
    for (std::size_t i = 0; i < out_stubs.size(); ++i)
        g.edges.emplace_back(out_stubs[i], in_stubs[i]);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace configprob
