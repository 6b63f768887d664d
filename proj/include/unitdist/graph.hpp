#pragma once

#include "unitdist/detail/sha256.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitdist {

// Fixed-size bit row used for fast adjacency tests and domain propagation.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    int size() const { return n_; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph: symmetric irreflexive adjacency with a stable
// vertex indexing, kept both as sorted neighbor lists and as bit rows.
struct UGraph {
    int n = 0;
    std::vector<std::string> labels;  // empty, or one label per vertex
    std::vector<std::vector<int>> adj;
    std::vector<BitRow> rows;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted

    explicit UGraph(int n_ = 0) : n(n_), adj(n_), rows(n_, BitRow(n_)) {}

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("self-loop rejected");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (i > j) std::swap(i, j);
        if (rows[i].test(j)) return;
        rows[i].set(j);
        rows[j].set(i);
        adj[i].push_back(j);
        adj[j].push_back(i);
        edges.emplace_back(i, j);
    }

    void finalize() {
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
        std::sort(edges.begin(), edges.end());
    }

    bool adjacent(int i, int j) const { return rows[i].test(j); }
    std::size_t edge_count() const { return edges.size(); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

// DIMACS export: header "p edge N M", then one "e i j" line per edge,
// 1-indexed with i < j, edges in lexicographic order. Byte-stable.
inline std::string to_dimacs(const UGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.n << " " << g.edges.size() << "\n";
    for (auto [i, j] : g.edges) os << "e " << i + 1 << " " << j + 1 << "\n";
    return os.str();
}

inline std::string dimacs_sha256(const UGraph& g) { return detail::sha256_hex(to_dimacs(g)); }

inline UGraph parse_dimacs(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    UGraph g;
    bool have_header = false;
    long long declared_edges = -1;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            long long n, m;
            if (!(ls >> kind >> n >> m) || kind != "edge")
                throw std::invalid_argument("dimacs: malformed problem line");
            g = UGraph(static_cast<int>(n));
            declared_edges = m;
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw std::invalid_argument("dimacs: edge before problem line");
            long long i, j;
            if (!(ls >> i >> j)) throw std::invalid_argument("dimacs: malformed edge line");
            g.add_edge(static_cast<int>(i - 1), static_cast<int>(j - 1));
        } else {
            throw std::invalid_argument("dimacs: unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("dimacs: missing problem line");
    if (declared_edges >= 0 && static_cast<long long>(g.edges.size()) != declared_edges)
        throw std::invalid_argument("dimacs: edge count mismatch");
    g.finalize();
    return g;
}

}  // namespace unitdist
