#pragma once

#include "unitdist/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace unitdist {

struct Coloring {
    std::vector<int> assignment;  // vertex index -> color in 0..k-1
    int k = 0;
};

// True iff the total assignment is proper. Audits certificates; shares no
// state with any solver.
inline bool verify_coloring(const UGraph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.n)
        throw std::invalid_argument("verify_coloring: assignment is not total");
    for (int color : c.assignment)
        if (color < 0 || color >= c.k)
            throw std::invalid_argument("verify_coloring: color out of range");
    for (auto [i, j] : g.edges)
        if (c.assignment[i] == c.assignment[j]) return false;
    return true;
}

// DSATUR greedy coloring. Deterministic tie-breaking: maximum saturation,
// then maximum static degree, then least index; least feasible color.
inline Coloring dsatur_upper(const UGraph& g) {
    Coloring out;
    out.assignment.assign(g.n, -1);
    out.k = 0;
    if (g.n == 0) return out;
    std::vector<BitRow> neighbor_colors(g.n, BitRow(g.n + 1));
    std::vector<int> sat(g.n, 0);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v) {
            if (out.assignment[v] >= 0) continue;
            if (best < 0 || sat[v] > sat[best] ||
                (sat[v] == sat[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        int color = 0;
        while (neighbor_colors[best].test(color)) ++color;
        out.assignment[best] = color;
        out.k = std::max(out.k, color + 1);
        for (int u : g.adj[best]) {
            if (out.assignment[u] >= 0) continue;
            if (!neighbor_colors[u].test(color)) {
                neighbor_colors[u].set(color);
                ++sat[u];
            }
        }
    }
    return out;
}

namespace detail_clique {

inline void expand_exact(const std::vector<std::uint64_t>& adj_mask, std::uint64_t cand,
                         std::vector<int>& current, std::vector<int>& best) {
    if (cand == 0) {
        if (current.size() > best.size()) best = current;
        return;
    }
    while (cand != 0) {
        if (current.size() + static_cast<std::size_t>(__builtin_popcountll(cand)) <= best.size())
            return;
        int v = __builtin_ctzll(cand);
        current.push_back(v);
        expand_exact(adj_mask, cand & adj_mask[v], current, best);
        current.pop_back();
        cand &= ~(std::uint64_t(1) << v);
    }
}

}  // namespace detail_clique

// A clique, pairwise adjacency guaranteed. Exact maximum via branch and
// bound below 64 vertices; deterministic greedy from every seed otherwise.
inline std::vector<int> clique_lower(const UGraph& g) {
    if (g.n == 0) return {};
    if (g.n < 64) {
        std::vector<std::uint64_t> adj_mask(g.n, 0);
        for (auto [i, j] : g.edges) {
            adj_mask[i] |= std::uint64_t(1) << j;
            adj_mask[j] |= std::uint64_t(1) << i;
        }
        std::vector<int> best, current;
        std::uint64_t all = g.n == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << g.n) - 1;
        detail_clique::expand_exact(adj_mask, all, current, best);
        std::sort(best.begin(), best.end());
        return best;
    }
    std::vector<int> best;
    for (int seed = 0; seed < g.n; ++seed) {
        std::vector<int> clique{seed};
        std::vector<char> cand(g.n, 0);
        for (int u : g.adj[seed]) cand[u] = 1;
        while (true) {
            int pick = -1, pick_score = -1;
            for (int u = 0; u < g.n; ++u) {
                if (!cand[u]) continue;
                int score = 0;
                for (int w : g.adj[u]) score += cand[w];
                if (score > pick_score) { pick = u; pick_score = score; }
            }
            if (pick < 0) break;
            clique.push_back(pick);
            cand[pick] = 0;
            for (int u = 0; u < g.n; ++u)
                if (cand[u] && !g.adjacent(u, pick)) cand[u] = 0;
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

// ---- exhaustive k-colorability ----

enum class SolveStatus { Sat, Unsat, Unresolved };

struct KColorOptions {
    std::uint64_t node_budget = ~std::uint64_t(0);
    bool clique_fixing = true;  // switch off for audit runs
};

struct KColorResult {
    SolveStatus status;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

namespace detail_solver {

struct Search {
    const UGraph& g;
    int k;
    std::uint64_t budget;
    std::vector<std::uint64_t> domain;   // k-bit feasibility mask per vertex
    std::vector<int> assignment;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    Search(const UGraph& g_, int k_, std::uint64_t budget_)
        : g(g_), k(k_), budget(budget_),
          domain(g_.n, k_ >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << k_) - 1),
          assignment(g_.n, -1) {}

    // Assign color c to v, pruning neighbor domains. Returns false on an
    // emptied domain; trail records domain bits removed for undo.
    bool assign(int v, int c, std::vector<int>& trail) {
        assignment[v] = c;
        std::uint64_t bit = std::uint64_t(1) << c;
        for (int u : g.adj[v]) {
            if (assignment[u] >= 0 || !(domain[u] & bit)) continue;
            domain[u] &= ~bit;
            trail.push_back(u);
            if (domain[u] == 0) return false;
        }
        return true;
    }

    void undo(int v, int c, const std::vector<int>& trail) {
        assignment[v] = -1;
        std::uint64_t bit = std::uint64_t(1) << c;
        for (int u : trail) domain[u] |= bit;
    }

    // DSATUR-ordered branch variable: max saturation (= colors removed from
    // the domain), then max static degree, then least index.
    int pick_vertex() const {
        int best = -1, best_sat = -1;
        for (int v = 0; v < g.n; ++v) {
            if (assignment[v] >= 0) continue;
            int sat = k - __builtin_popcountll(domain[v]);
            if (best < 0 || sat > best_sat ||
                (sat == best_sat && g.degree(v) > g.degree(best)))
                { best = v; best_sat = sat; }
        }
        return best;
    }

    // Complete search with one-new-color symmetry breaking: a vertex may use
    // any feasible already-introduced color, or the single next fresh color.
    // Color classes are interchangeable, so this loses no solutions.
    bool solve(int colors_used) {
        if (++nodes > budget) { budget_hit = true; return false; }
        int v = pick_vertex();
        if (v < 0) return true;
        int limit = std::min(k, colors_used + 1);
        std::uint64_t candidates = domain[v] & ((limit >= 64 ? ~std::uint64_t(0)
                                                             : (std::uint64_t(1) << limit) - 1));
        while (candidates != 0) {
            int c = __builtin_ctzll(candidates);
            candidates &= candidates - 1;
            std::vector<int> trail;
            bool ok = assign(v, c, trail);
            if (ok && solve(std::max(colors_used, c + 1))) return true;
            undo(v, c, trail);
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace detail_solver

// Proper k-coloring, or a definitive absence answer by complete search, or
// Unresolved when the node budget runs out. Canonical mode fixes a clique's
// colors first and is fully deterministic.
inline KColorResult k_colorable(const UGraph& g, int k, const KColorOptions& opts = {}) {
    if (k < 1) throw std::invalid_argument("k_colorable: k must be >= 1");
    if (g.n == 0) return {SolveStatus::Sat, Coloring{{}, k}, 0};
    if (k > 64) throw std::invalid_argument("k_colorable: k > 64 unsupported");

    detail_solver::Search search(g, k, opts.node_budget);
    int colors_used = 0;
    std::vector<int> pre_trail;
    if (opts.clique_fixing) {
        std::vector<int> clique = clique_lower(g);
        // Any proper k-coloring gives the clique pairwise-distinct colors, so
        // fixing the first min(|clique|, k) of them to 0,1,2,... is lossless;
        // if the clique exceeds k the propagation below proves Unsat.
        for (std::size_t i = 0; i < clique.size(); ++i) {
            if (static_cast<int>(i) >= k)
                return {SolveStatus::Unsat, std::nullopt, 0};
            if (!search.assign(clique[i], static_cast<int>(i), pre_trail))
                return {SolveStatus::Unsat, std::nullopt, 0};
            colors_used = static_cast<int>(i) + 1;
        }
    }
    bool found = search.solve(colors_used);
    if (search.budget_hit) return {SolveStatus::Unresolved, std::nullopt, search.nodes};
    if (!found) return {SolveStatus::Unsat, std::nullopt, search.nodes};
    Coloring c{search.assignment, k};
    return {SolveStatus::Sat, c, search.nodes};
}

// ---- structure probes ----

struct StructureReport {
    bool is_bipartite = false;
    long long triangle_count = 0;
    std::optional<int> shortest_odd_cycle;
};

namespace detail_struct {

// BFS layers from s; returns an odd closed walk through s of minimum length
// among those detected from this root, as a vertex list, or empty.
inline std::vector<int> odd_walk_from(const UGraph& g, int s, int upper_bound) {
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (2 * dist[u] + 1 >= upper_bound) break;
        for (int v : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    std::vector<int> best;
    int best_len = upper_bound;
    for (auto [u, v] : g.edges) {
        if (dist[u] < 0 || dist[v] < 0 || dist[u] != dist[v]) continue;
        int len = dist[u] + dist[v] + 1;
        if (len >= best_len) continue;
        std::vector<int> pu, pv;
        for (int x = u; x >= 0; x = parent[x]) pu.push_back(x);
        for (int x = v; x >= 0; x = parent[x]) pv.push_back(x);
        std::reverse(pu.begin(), pu.end());  // s ... u
        std::vector<int> walk = pu;          // s..u, then v..s (excluding final s)
        for (std::size_t i = 0; i + 1 < pv.size(); ++i) walk.push_back(pv[i]);
        best = std::move(walk);
        best_len = len;
    }
    return best;
}

// Reduce an odd closed walk (first vertex = base, last edge wraps) to a
// simple odd cycle contained in it.
inline std::vector<int> walk_to_cycle(std::vector<int> walk) {
    while (true) {
        std::vector<int> seen_at(*std::max_element(walk.begin(), walk.end()) + 1, -1);
        int rep_first = -1, rep_second = -1;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (seen_at[walk[i]] >= 0) { rep_first = seen_at[walk[i]]; rep_second = static_cast<int>(i); break; }
            seen_at[walk[i]] = static_cast<int>(i);
        }
        if (rep_first < 0) return walk;
        // Split into walk[rep_first..rep_second) and the rest; keep the odd part.
        std::vector<int> inner(walk.begin() + rep_first, walk.begin() + rep_second);
        std::vector<int> outer(walk.begin(), walk.begin() + rep_first);
        outer.insert(outer.end(), walk.begin() + rep_second, walk.end());
        walk = (inner.size() % 2 == 1) ? std::move(inner) : std::move(outer);
    }
}

}  // namespace detail_struct

// Shortest odd cycle as an explicit vertex list (consecutive adjacency,
// wrapping), or nullopt when the graph is bipartite.
inline std::optional<std::vector<int>> shortest_odd_cycle_vertices(const UGraph& g) {
    std::vector<int> best;
    int best_len = g.n + 1;
    for (int s = 0; s < g.n; ++s) {
        auto walk = detail_struct::odd_walk_from(g, s, best_len);
        if (!walk.empty() && static_cast<int>(walk.size()) < best_len) {
            best = walk;
            best_len = static_cast<int>(walk.size());
        }
    }
    if (best.empty()) return std::nullopt;
    best = detail_struct::walk_to_cycle(best);
    return best;
}

inline StructureReport structure_probe(const UGraph& g) {
    StructureReport rep;
    // Bipartiteness by BFS 2-coloring.
    std::vector<int> side(g.n, -1);
    rep.is_bipartite = true;
    for (int s = 0; s < g.n && rep.is_bipartite; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size() && rep.is_bipartite; ++head) {
            int u = queue[head];
            for (int v : g.adj[u]) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    rep.is_bipartite = false;
                    break;
                }
            }
        }
    }
    // Triangles by adjacency intersection over edges.
    long long tri = 0;
    for (auto [i, j] : g.edges) {
        const auto& wi = g.rows[i].words();
        const auto& wj = g.rows[j].words();
        for (std::size_t w = 0; w < wi.size(); ++w) tri += __builtin_popcountll(wi[w] & wj[w]);
    }
    rep.triangle_count = tri / 3;
    if (!rep.is_bipartite) {
        auto cyc = shortest_odd_cycle_vertices(g);
        rep.shortest_odd_cycle = static_cast<int>(cyc->size());
    }
    return rep;
}

// ---- exact chromatic number with certificate ----

struct CliqueWitness { std::vector<int> vertices; };
struct OddCycleWitness { std::vector<int> vertices; };
struct UnsatWitness {
    int k;                 // no k-coloring exists
    std::uint64_t nodes;   // complete-search attestation
};
using LowerWitness = std::variant<CliqueWitness, OddCycleWitness, UnsatWitness>;

struct ChiCertificate {
    int chi = 0;
    Coloring upper;
    LowerWitness lower;
};

struct ChiResult {
    std::optional<ChiCertificate> certificate;  // absent when budget ran out
    int lower_bound = 0;
    int upper_bound = 0;
    std::uint64_t total_nodes = 0;

    bool resolved() const { return certificate.has_value(); }
    int chi() const {
        if (!certificate) throw std::logic_error("chi() on an unresolved result");
        return certificate->chi;
    }
};

inline ChiResult chi_exact(const UGraph& g, const KColorOptions& opts = {}) {
    ChiResult out;
    if (g.n == 0) {
        out.certificate = ChiCertificate{0, Coloring{{}, 0}, CliqueWitness{{}}};
        return out;
    }
    Coloring heuristic = dsatur_upper(g);
    std::vector<int> clique = clique_lower(g);
    int lb = std::max<int>(1, static_cast<int>(clique.size()));
    int ub = heuristic.k;
    out.lower_bound = lb;
    out.upper_bound = ub;

    int chi = ub;
    Coloring upper = heuristic;
    std::uint64_t unsat_nodes = 0;  // nodes of the UNSAT run at chi-1
    for (int k = lb; k < ub; ++k) {
        KColorResult res = k_colorable(g, k, opts);
        out.total_nodes += res.nodes;
        if (res.status == SolveStatus::Unresolved) {
            out.lower_bound = k;  // all k' < k proved uncolorable
            return out;
        }
        if (res.status == SolveStatus::Sat) {
            chi = k;
            upper = *res.coloring;
            break;
        }
        unsat_nodes = res.nodes;
    }
    out.lower_bound = chi;
    out.upper_bound = chi;

    LowerWitness lower;
    if (static_cast<int>(clique.size()) == chi) {
        lower = CliqueWitness{clique};
    } else if (chi == 3) {
        auto cyc = shortest_odd_cycle_vertices(g);
        if (!cyc) throw std::logic_error("chi 3 but no odd cycle found");
        lower = OddCycleWitness{*cyc};
    } else {
        lower = UnsatWitness{chi - 1, unsat_nodes};
    }
    out.certificate = ChiCertificate{chi, upper, lower};
    return out;
}

// Independent oracle for tests: exhaustive enumeration over all assignments
// in vertex-index order, k = 1, 2, ... No heuristics, no symmetry breaking,
// no shared machinery with the solver above.
inline int brute_force_chi(const UGraph& g) {
    if (g.n > 12) throw std::invalid_argument("brute_force_chi: n must be <= 12");
    if (g.n == 0) return 0;
    std::vector<int> colors(g.n, -1);
    auto feasible = [&](auto&& self, int v, int k) -> bool {
        if (v == g.n) return true;
        for (int c = 0; c < k; ++c) {
            bool clash = false;
            for (int u : g.adj[v])
                if (u < v && colors[u] == c) { clash = true; break; }
            if (clash) continue;
            colors[v] = c;
            if (self(self, v + 1, k)) return true;
            colors[v] = -1;
        }
        return false;
    };
    for (int k = 1; k <= g.n; ++k)
        if (feasible(feasible, 0, k)) return k;
    return g.n;
}

}  // namespace unitdist
