// Labeled multigraph as produced by stub matching: self-loops and parallel
// edges are kept. Edges are stored canonically (undirected endpoints with
// u <= v, list sorted), so equal samples serialize identically.

#pragma once

#include "configprob/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace configprob {

struct MultiGraph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;  // canonical order, u->v if directed

    long long edge_count() const { return static_cast<long long>(edges.size()); }

    // Parallel-edge count between u and v (unordered if undirected, u->v if
    // directed); self-loop multiplicity when u == v.
    int multiplicity(int u, int v) const;

    int self_loop_count() const;

    // Edges in excess of one per vertex pair (each class of m parallel edges
    // contributes m - 1).
    int multi_edge_count() const;

    // Undirected degrees; a self-loop contributes 2 to its vertex.
    std::vector<int> degrees() const;
    std::vector<int> in_degrees() const;
    std::vector<int> out_degrees() const;
};

bool is_simple(const MultiGraph& g);

// Edge-list format: a '#' header line carrying n, L, directed flag and seed,
// then one "u v" line per edge in canonical order.
void write_edge_list(std::ostream& out, const MultiGraph& g, std::uint64_t seed);
MultiGraph read_edge_list(std::istream& in, const std::string& name);

} // namespace configprob
