#include "unitdist/chromatic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace unitdist;

namespace {

UGraph cycle(int n) {
    UGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.finalize();
    return g;
}

UGraph complete(int n) {
    UGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.finalize();
    return g;
}

// Triangle-free graph with chromatic number 4 (Mycielski construction on C5).
UGraph grotzsch() {
    UGraph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(10, 5 + i);
    }
    g.finalize();
    return g;
}

UGraph random_graph(int n, std::mt19937_64& rng) {
    UGraph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    g.finalize();
    return g;
}

}  // namespace

TEST_CASE("coloring verification") {
    UGraph g = cycle(4);
    CHECK(verify_coloring(g, Coloring{{0, 1, 0, 1}, 2}));
    CHECK_FALSE(verify_coloring(g, Coloring{{0, 1, 1, 1}, 2}));
    CHECK_THROWS_AS(verify_coloring(g, Coloring{{0, 1, 0}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(g, Coloring{{0, 1, 0, 2}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(g, Coloring{{0, 1, 0, -1}, 2}), std::invalid_argument);
}

TEST_CASE("dsatur produces proper colorings") {
    for (auto g : {cycle(5), cycle(6), complete(4), grotzsch()}) {
        Coloring c = dsatur_upper(g);
        CHECK(verify_coloring(g, c));
    }
    CHECK(dsatur_upper(complete(4)).k == 4);
    CHECK(dsatur_upper(cycle(6)).k == 2);
    CHECK(dsatur_upper(cycle(5)).k == 3);
}

TEST_CASE("clique lower bounds") {
    CHECK(clique_lower(complete(4)).size() == 4);
    CHECK(clique_lower(cycle(5)).size() == 2);
    CHECK(clique_lower(grotzsch()).size() == 2);
    CHECK(clique_lower(UGraph(0)).empty());
    CHECK(clique_lower(UGraph(1)).size() == 1);

    // Exact branch and bound below 64 vertices: K5 plus pendant vertices.
    UGraph g(63);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) g.add_edge(i, j);
    for (int v = 5; v < 63; ++v) g.add_edge(0, v);
    g.finalize();
    auto best = clique_lower(g);
    CHECK(best == std::vector<int>{0, 1, 2, 3, 4});

    // Greedy fallback at n >= 64 still finds a maximal clique.
    UGraph big(70);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) big.add_edge(i, j);
    for (int v = 6; v < 70; ++v) big.add_edge(v, v - 1);
    big.finalize();
    CHECK(clique_lower(big).size() >= 3);
}

TEST_CASE("k-coloring search") {
    CHECK(k_colorable(cycle(5), 3).status == SolveStatus::Sat);
    CHECK(k_colorable(cycle(5), 2).status == SolveStatus::Unsat);
    CHECK(k_colorable(cycle(6), 2).status == SolveStatus::Sat);

    // A clique larger than k refutes without any search nodes.
    auto pruned = k_colorable(complete(5), 3);
    CHECK(pruned.status == SolveStatus::Unsat);
    CHECK(pruned.nodes == 0);

    auto sat = k_colorable(complete(5), 5);
    REQUIRE(sat.status == SolveStatus::Sat);
    REQUIRE(sat.coloring.has_value());
    CHECK(verify_coloring(complete(5), *sat.coloring));

    KColorOptions tiny;
    tiny.node_budget = 1;
    CHECK(k_colorable(grotzsch(), 3, tiny).status == SolveStatus::Unresolved);

    CHECK_THROWS_AS(k_colorable(cycle(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(k_colorable(cycle(3), 65), std::invalid_argument);
}

TEST_CASE("exact chromatic numbers with witnesses") {
    ChiResult empty = chi_exact(UGraph(0));
    CHECK(empty.resolved());
    CHECK(empty.chi() == 0);

    ChiResult single = chi_exact(UGraph(1));
    CHECK(single.chi() == 1);

    ChiResult c5 = chi_exact(cycle(5));
    REQUIRE(c5.resolved());
    CHECK(c5.chi() == 3);
    REQUIRE(std::holds_alternative<OddCycleWitness>(c5.certificate->lower));
    CHECK(std::get<OddCycleWitness>(c5.certificate->lower).vertices.size() == 5);

    ChiResult c6 = chi_exact(cycle(6));
    CHECK(c6.chi() == 2);

    ChiResult k4 = chi_exact(complete(4));
    CHECK(k4.chi() == 4);
    REQUIRE(std::holds_alternative<CliqueWitness>(k4.certificate->lower));
    CHECK(std::get<CliqueWitness>(k4.certificate->lower).vertices.size() == 4);

    ChiResult gz = chi_exact(grotzsch());
    CHECK(gz.chi() == 4);
    REQUIRE(std::holds_alternative<UnsatWitness>(gz.certificate->lower));
    CHECK(std::get<UnsatWitness>(gz.certificate->lower).k == 3);

    KColorOptions tiny;
    tiny.node_budget = 1;
    ChiResult capped = chi_exact(grotzsch(), tiny);
    CHECK_FALSE(capped.resolved());
    CHECK(capped.lower_bound >= 2);
    CHECK(capped.upper_bound >= capped.lower_bound);
    CHECK_THROWS_AS(capped.chi(), std::logic_error);
}

TEST_CASE("solver agrees with brute force on random graphs") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        UGraph g = random_graph(1 + trial % 9, rng);
        ChiResult res = chi_exact(g);
        REQUIRE(res.resolved());
        CHECK(res.chi() == brute_force_chi(g));
        CHECK(verify_coloring(g, res.certificate->upper));
    }
}

TEST_CASE("structure probe") {
    StructureReport c5 = structure_probe(cycle(5));
    CHECK_FALSE(c5.is_bipartite);
    CHECK(c5.triangle_count == 0);
    CHECK(c5.shortest_odd_cycle == 5);

    StructureReport c6 = structure_probe(cycle(6));
    CHECK(c6.is_bipartite);
    CHECK_FALSE(c6.shortest_odd_cycle.has_value());

    StructureReport k4 = structure_probe(complete(4));
    CHECK(k4.triangle_count == 4);
    CHECK(k4.shortest_odd_cycle == 3);

    StructureReport gz = structure_probe(grotzsch());
    CHECK(gz.triangle_count == 0);
    CHECK(gz.shortest_odd_cycle == 5);

    // Odd cycle hidden in the second component.
    UGraph two(8);
    two.add_edge(0, 1);
    for (int i = 2; i < 7; ++i) two.add_edge(i, i + 1 == 7 ? 2 : i + 1);
    two.finalize();
    StructureReport rep = structure_probe(two);
    CHECK_FALSE(rep.is_bipartite);
    CHECK(rep.shortest_odd_cycle == 5);
}
