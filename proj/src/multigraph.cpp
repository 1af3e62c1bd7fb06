#include "configprob/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace configprob {

namespace {

void check_vertex(const MultiGraph& g, int v) {
    if (v < 0 || v >= g.n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " +
                        std::to_string(g.n) + ")");
}

} // namespace

int MultiGraph::multiplicity(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    std::pair<int, int> key{u, v};
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    const auto range = std::equal_range(edges.begin(), edges.end(), key);
    return static_cast<int>(range.second - range.first);
}

int MultiGraph::self_loop_count() const {
    int count = 0;
    for (const auto& [u, v] : edges) count += (u == v);
    return count;
}

int MultiGraph::multi_edge_count() const {
    int count = 0;
    for (std::size_t i = 1; i < edges.size(); ++i)
        count += (edges[i] == edges[i - 1]);
    return count;
}

std::vector<int> MultiGraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        deg[u] += 1;
        deg[v] += 1;  // self-loop counts twice
    }
    return deg;
}

std::vector<int> MultiGraph::in_degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges) deg[e.second] += 1;
    return deg;
}

std::vector<int> MultiGraph::out_degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges) deg[e.first] += 1;
    return deg;
}

bool is_simple(const MultiGraph& g) {
    return g.self_loop_count() == 0 && g.multi_edge_count() == 0;
}

void write_edge_list(std::ostream& out, const MultiGraph& g, std::uint64_t seed) {
    out << "# n=" << g.n << " L=" << g.edge_count()
        << " directed=" << (g.directed ? 1 : 0) << " seed=" << seed << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

MultiGraph read_edge_list(std::istream& in, const std::string& name) {
    MultiGraph g;
    bool header_seen = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') {
            std::istringstream ss(line.substr(pos + 1));
            std::string tok;
            while (ss >> tok) {
                if (tok.rfind("n=", 0) == 0) {
                    g.n = std::stoi(tok.substr(2));
                    header_seen = true;
                } else if (tok.rfind("directed=", 0) == 0) {
                    g.directed = tok.substr(9) != "0";
                }
            }
            continue;
        }
        std::istringstream ss(line);
        int u, v;
        if (!(ss >> u >> v))
            throw Error(ErrorKind::ParseError,
                        name + ":" + std::to_string(lineno) + ": expected 'u v'");
        g.edges.emplace_back(u, v);
    }
    if (!header_seen) {
        int max_v = -1;
        for (const auto& [u, v] : g.edges) max_v = std::max({max_v, u, v});
        g.n = max_v + 1;
    }
    for (auto& [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw Error(ErrorKind::VertexOutOfRange,
                        name + ": edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") outside vertex range");
        if (!g.directed && u > v) std::swap(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace configprob
