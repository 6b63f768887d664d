#pragma once

// Implementation of verify_paper(); included at the end of catalog.hpp.
// Claims run and report in lexicographic id order.

#include <variant>

namespace unitdist {

namespace detail_claims {

inline std::string witness_kind(const LowerWitness& w) {
    if (std::holds_alternative<CliqueWitness>(w)) return "clique";
    if (std::holds_alternative<OddCycleWitness>(w)) return "odd_cycle";
    return "exhaustive_unsat";
}

struct ClaimRunner {
    double budget_seconds;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::vector<PaperClaim> out;

    explicit ClaimRunner(double budget) : budget_seconds(budget) {}

    // limit_seconds == 0 means "no per-check wall clock requirement".
    template <typename F>
    void run(const std::string& id, const std::string& desc, double limit_seconds, F&& body) {
        PaperClaim claim{id, desc, ClaimStatus::Skipped, ""};
        if (seconds_since(t0) > budget_seconds) {
            claim.evidence = "time budget exhausted before this check started";
            out.push_back(std::move(claim));
            return;
        }
        auto start = std::chrono::steady_clock::now();
        try {
            std::ostringstream ev;
            bool ok = body(ev);
            double dt = seconds_since(start);
            claim.elapsed_seconds = dt;
            claim.evidence = ev.str();
            if (ok && limit_seconds > 0 && dt > limit_seconds) {
                ok = false;
                std::ostringstream note;
                note << " (wall clock exceeded the " << limit_seconds << "s limit)";
                claim.evidence += note.str();
            }
            claim.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
        } catch (const std::exception& e) {
            claim.elapsed_seconds = seconds_since(start);
            claim.status = ClaimStatus::Fail;
            claim.evidence = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(claim));
    }
};

}  // namespace detail_claims

inline std::vector<PaperClaim> verify_paper(double budget_seconds) {
    using namespace detail_claims;
    using detail_random::Rng;
    ClaimRunner runner(budget_seconds);
    const DiagForm e2 = DiagForm::euclidean(2);

    runner.run("c5_sqrt_neg5_odd_cycle",
               "verifies: the 5-point configuration over Q(sqrt -5) has exactly 5 unit distances forming an odd cycle",
               1.0, [&](std::ostringstream& ev) {
        UGraph g = build_exact_graph(fixture_c5_sqrt_neg5(), e2);
        StructureReport probe = structure_probe(g);
        bool ok = g.n == 5 && is_cycle_graph(g) && probe.shortest_odd_cycle == 5;
        ev << "n=" << g.n << " m=" << g.edge_count()
           << " odd_girth=" << (probe.shortest_odd_cycle ? *probe.shortest_odd_cycle : -1);
        return ok;
    });

    runner.run("c9_sqrt7_cycle",
               "verifies: the 9-point configuration over Q(sqrt 7) has exactly 9 unit distances, no triangle, and 3 is not a square in Q(sqrt 7)",
               1.0, [&](std::ostringstream& ev) {
        UGraph g = build_exact_graph(fixture_c9_sqrt7(), e2);
        StructureReport probe = structure_probe(g);
        bool nonsquare = !is_square_rational_in_quad(Rat(3), 7).has_value();
        bool ok = g.n == 9 && is_cycle_graph(g) && probe.triangle_count == 0 && nonsquare;
        ev << "n=" << g.n << " m=" << g.edge_count() << " cycle=" << (is_cycle_graph(g) ? "yes" : "no")
           << " triangles=" << probe.triangle_count << " 3_nonsquare=" << (nonsquare ? "yes" : "no");
        return ok;
    });

    runner.run("chi_f11_equals_5",
               "recomputes: the unit-distance graph on F_11^2 has chromatic number exactly 5 (complete search refutes 4 colors)",
               3600.0, [&](std::ostringstream& ev) {
        UGraph g = build_fp_graph(11, 2, e2);
        ChiResult res = chi_exact(g);
        bool ok = res.resolved() && res.chi() == 5 && verify_coloring(g, res.certificate->upper);
        std::uint64_t unsat_nodes = 0;
        if (ok) {
            ok = witness_kind(res.certificate->lower) == "exhaustive_unsat";
            if (ok) {
                const auto& w = std::get<UnsatWitness>(res.certificate->lower);
                ok = w.k == 4;
                unsat_nodes = w.nodes;
            }
        }
        ev << "chi=" << (res.resolved() ? res.chi() : -1) << " unsat_nodes(k=4)=" << unsat_nodes
           << " total_nodes=" << res.total_nodes;
        return ok;
    });

    runner.run("chi_f3_equals_3",
               "recomputes: the unit-distance graph on F_3^2 has chromatic number 3, with a clique lower bound and a proper 3-coloring",
               1.0, [&](std::ostringstream& ev) {
        UGraph g = build_fp_graph(3, 2, e2);
        ChiResult res = chi_exact(g);
        bool ok = res.resolved() && res.chi() == 3 && verify_coloring(g, res.certificate->upper);
        std::string kind = ok ? witness_kind(res.certificate->lower) : "-";
        ok = ok && kind == "clique" &&
             std::get<CliqueWitness>(res.certificate->lower).vertices.size() == 3;
        ev << "n=" << g.n << " m=" << g.edge_count()
           << " chi=" << (res.resolved() ? res.chi() : -1) << " lower=" << kind;
        return ok;
    });

    runner.run("circle_counts",
               "verifies: the unit circle in F_p^2 has p - (-1|p) points for every odd prime p < 100",
               0.0, [&](std::ostringstream& ev) {
        int primes = 0;
        for (long long p = 3; p < 100; p += 2) {
            if (!is_prime(p)) continue;
            auto sphere = unit_sphere_fp(p, 2, e2);
            long long expect = p - legendre(Int(-1), p);
            if (static_cast<long long>(sphere.size()) != expect) return false;
            ++primes;
        }
        ev << "odd_primes_checked=" << primes << "; counts match p-(-1|p)";
        return primes > 0;
    });

    runner.run("f11_table_proper",
               "verifies: the transcribed 11x11 table is a proper 5-coloring of the F_11 plane graph (121 vertices, 726 edges, 12-regular)",
               1.0, [&](std::ostringstream& ev) {
        UGraph g = build_fp_graph(11, 2, e2);
        bool ok = g.n == 121 && g.edge_count() == 726;
        for (int v = 0; v < g.n && ok; ++v) ok = g.degree(v) == 12;
        Coloring col;
        col.k = 5;
        col.assignment.resize(121);
        int max_color = 0;
        for (int i = 0; i < 121; ++i) {
            int u = i / 11, v = i % 11;
            ok = ok && g.labels[i] == std::to_string(u) + "," + std::to_string(v);
            col.assignment[i] = kF11Table[u][v];
            max_color = std::max(max_color, col.assignment[i]);
        }
        ok = ok && max_color == 4 && verify_coloring(g, col);
        ev << "n=" << g.n << " m=" << g.edge_count() << " degrees=12 colors=" << max_color + 1;
        return ok;
    });

    runner.run("lorentz_cycles",
               "verifies: the hyperbola constructions are exact (k+2)-cycles under the form (1,-1) for k=3..10, the rational 4-cycle closes, and the 9-point graph has no triangle",
               0.0, [&](std::ostringstream& ev) {
        const DiagForm lor = DiagForm::lorentz();
        bool ok = true;
        for (int k = 3; k <= 10; ++k) {
            UGraph g = build_exact_graph(fixture_lorentz_cycle(k), lor);
            ok = ok && g.n == k + 2 && is_cycle_graph(g);
        }
        UGraph g4 = build_exact_graph(fixture_lorentz_rational_4cycle(), lor);
        ok = ok && g4.n == 4 && is_cycle_graph(g4);
        UGraph nine = build_exact_graph(fixture_lorentz_cycle(7), lor);
        long long tri = structure_probe(nine).triangle_count;
        ok = ok && nine.n == 9 && tri == 0;
        ev << "cycles k=3..10 exact, rational_4cycle=" << (is_cycle_graph(g4) ? "yes" : "no")
           << ", 9_point_triangles=" << tri;
        return ok;
    });

    runner.run("oracle_soundness",
               "verifies: each plane coloring oracle assigns distinct colors to 10^4 random exact unit-distance pairs, within its color budget",
               60.0, [&](std::ostringstream& ev) {
        const int trials = 10000;
        Rng rng(20260817);
        long long checked = 0;
        auto sound_rat = [&]() {
            for (int t = 0; t < trials; ++t) {
                PointT<Rat> x = {detail_random::random_rat(rng, 2), detail_random::random_rat(rng, 2)};
                PointT<Rat> d = circle_param(detail_random::random_rat(rng, 2));
                PointT<Rat> y = {x[0] + d[0], x[1] + d[1]};
                int c1 = color_oracle(OracleId::Q2COLOR, x);
                int c2 = color_oracle(OracleId::Q2COLOR, y);
                if (c1 == c2 || c1 < 0 || c1 >= 2 || c2 < 0 || c2 >= 2) return false;
                ++checked;
            }
            return true;
        };
        auto sound_quad = [&](OracleId id, long long m, long long p) {
            int k = oracle_colors(id);
            for (int t = 0; t < trials; ++t) {
                PointT<QuadElem> x = {detail_random::random_quad(rng, m, p),
                                      detail_random::random_quad(rng, m, p)};
                PointT<QuadElem> d = circle_param(detail_random::random_quad(rng, m, p));
                PointT<QuadElem> y = {x[0] + d[0], x[1] + d[1]};
                int c1 = color_oracle(id, x);
                int c2 = color_oracle(id, y);
                if (c1 == c2 || c1 < 0 || c1 >= k || c2 < 0 || c2 >= k) return false;
                ++checked;
            }
            return true;
        };
        bool ok = sound_rat() && sound_quad(OracleId::SQRT2_2COLOR, 2, 2) &&
                  sound_quad(OracleId::SQRT3_3COLOR, 3, 3) &&
                  sound_quad(OracleId::SQRT7_3COLOR, 7, 3) &&
                  sound_quad(OracleId::SQRTNEG5_3COLOR, -5, 3);
        ev << "pairs_separated=" << checked << "/" << 5 * trials;
        return ok;
    });

    runner.run("reciprocity_rules",
               "verifies: the congruence tests for 3 and 11 being squares mod q agree with the Legendre symbol for every odd prime q < 10^4",
               5.0, [&](std::ostringstream& ev) {
        long long count3 = 0, count11 = 0;
        for (long long q = 3; q < 10000; q += 2) {
            if (!is_prime(q)) continue;
            if (q != 3) {
                if (residue_rule(3, q) != (legendre(Int(3), q) == 1)) return false;
                ++count3;
            }
            if (q != 11) {
                if (residue_rule(11, q) != (legendre(Int(11), q) == 1)) return false;
                ++count11;
            }
        }
        ev << "primes_checked: a=3: " << count3 << ", a=11: " << count11 << "; all agree";
        return count3 > 1000 && count11 > 1000;
    });

    runner.run("reduction_homomorphisms",
               "verifies: reducing the spindle mod the ramified prime over 11 and the 9-cycle mod a split prime over 3 maps every unit edge to a unit edge",
               0.0, [&](std::ostringstream& ev) {
        HomReport spindle = reduce_graph_hom(fixture_moser_spindle(),
                                             prime_spec_biquad_ramified(3, 11, 11, 5), e2);
        HomReport c9 = reduce_graph_hom(fixture_c9_sqrt7(), prime_spec_split(7, 3, 2), e2);
        bool ok = spindle.edges_checked == 11 && spindle.violations == 0 &&
                  c9.edges_checked == 9 && c9.violations == 0;
        ev << "spindle: " << spindle.edges_checked << " edges, " << spindle.violations
           << " violations; c9: " << c9.edges_checked << " edges, " << c9.violations << " violations";
        return ok;
    });

    runner.run("solver_vs_bruteforce",
               "recomputes: on 200 seeded random graphs with at most 10 vertices the search solver matches brute force and its certificates check",
               60.0, [&](std::ostringstream& ev) {
        Rng rng(777);
        std::bernoulli_distribution coin(0.5);
        int agree = 0;
        for (int i = 0; i < 200; ++i) {
            int n = 1 + i % 10;
            UGraph g(n);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (coin(rng)) g.add_edge(a, b);
            g.finalize();
            ChiResult res = chi_exact(g);
            if (!res.resolved() || res.chi() != brute_force_chi(g)) return false;
            if (!check_certificate(g, certificate_json(g, *res.certificate)).ok) return false;
            ++agree;
        }
        ev << "graphs=" << agree << "/200 agree, all certificates check";
        return agree == 200;
    });

    runner.run("spindle_chi_equals_4",
               "recomputes: the 7-point spindle has chromatic number 4 (complete search refutes 3 colors)",
               1.0, [&](std::ostringstream& ev) {
        UGraph g = build_exact_graph(fixture_moser_spindle(), e2);
        ChiResult res = chi_exact(g);
        bool ok = res.resolved() && res.chi() == 4 && verify_coloring(g, res.certificate->upper) &&
                  witness_kind(res.certificate->lower) == "exhaustive_unsat" &&
                  std::get<UnsatWitness>(res.certificate->lower).k == 3;
        ev << "chi=" << (res.resolved() ? res.chi() : -1)
           << " lower=" << (res.resolved() ? witness_kind(res.certificate->lower) : "-");
        return ok;
    });

    runner.run("spindle_edges_exact",
               "verifies: among all 21 point pairs of the spindle, exactly the 11 published pairs are at unit distance",
               1.0, [&](std::ostringstream& ev) {
        UGraph g = build_exact_graph(fixture_moser_spindle(), e2);
        std::set<std::pair<int, int>> got(g.edges.begin(), g.edges.end()), want;
        for (auto [i, j] : moser_spindle_edges()) want.emplace(std::min(i, j), std::max(i, j));
        bool ok = got == want;
        ev << "edges=" << g.edge_count() << " non_edges=" << 21 - g.edge_count()
           << " edge_set_match=" << (ok ? "yes" : "no");
        return ok;
    });

    runner.run("sqrt2_quotient_bipartite",
               "verifies: the 16-class Q(sqrt 2) quotient has neighbor set {01,10,UU,VV} at 00, a proper 2-coloring, and is bipartite",
               1.0, [&](std::ostringstream& ev) {
        Sqrt2QuotientFixture fx = fixture_sqrt2_quotient();
        std::set<std::string> nbrs;
        for (int u : fx.graph.adj[0]) nbrs.insert(fx.graph.labels[u]);
        std::set<std::string> want = {"01", "10", "UU", "VV"};
        bool proper = verify_coloring(fx.graph, fx.two_coloring);
        bool ok = nbrs == want && fx.graph.edge_count() == 32 && proper &&
                  structure_probe(fx.graph).is_bipartite;
        ev << "m=" << fx.graph.edge_count() << " N(00)={";
        bool first = true;
        for (const auto& s : nbrs) { ev << (first ? "" : ",") << s; first = false; }
        ev << "} proper_2coloring=" << (proper ? "yes" : "no");
        return ok;
    });

    runner.run("unit_identity_exact",
               "verifies: (23+4 sqrt 33)(23-4 sqrt 33) = 1 and 11 = (23+4 sqrt 33) pi^2 pi'^2 hold exactly in Q(sqrt 3, sqrt 11)",
               0.0, [&](std::ostringstream& ev) {
        UnitIdentityFixture fx = fixture_unit_identity();
        BiQuadElem one{3, 11, 1, 0, 0, 0}, eleven{3, 11, 11, 0, 0, 0};
        bool unit_ok = fx.unit * fx.unit_inverse == one;
        bool factor_ok = fx.unit * fx.pi * fx.pi * fx.pi_conj * fx.pi_conj == eleven;
        ev << "unit_times_inverse=1: " << (unit_ok ? "yes" : "no")
           << "; 11=u*pi^2*pi'^2: " << (factor_ok ? "yes" : "no");
        return unit_ok && factor_ok;
    });

    runner.run("valuation_axioms",
               "verifies: v(xy)=v(x)+v(y) and the ultrametric inequality (with equality off ties) on 10^4 random pairs per field/prime",
               0.0, [&](std::ostringstream& ev) {
        const int trials = 10000;
        Rng rng(4242);
        long long configs = 0;
        auto axioms = [&](auto&& draw, auto&& val) {
            for (int t = 0; t < trials; ++t) {
                auto x = draw();
                auto y = draw();
                HalfVal vx = val(x), vy = val(y);
                if (!(val(x * y) == vx + vy)) return false;
                HalfVal vs = val(x + y), lo = min(vx, vy);
                if (vs < lo) return false;
                if (vx != vy && vs != lo) return false;
            }
            ++configs;
            return true;
        };
        for (long long p : {2LL, 3LL, 11LL}) {
            if (!axioms([&] { return detail_random::random_nonzero_rat(rng, p); },
                        [&](const Rat& r) { return rat_val(r, p); }))
                return false;
        }
        for (auto [m, p] : std::vector<std::pair<long long, long long>>{{2, 2}, {3, 3}, {-5, 5}}) {
            if (!axioms([&, m = m, p = p] { return detail_random::random_nonzero_quad(rng, m, p); },
                        [p = p](const QuadElem& x) { return quad_val_ramified(x, p); }))
                return false;
        }
        for (auto [m, p, root] : std::vector<std::tuple<long long, long long, long long>>{
                 {7, 3, 2}, {-5, 3, 2}}) {
            if (!axioms([&, m = m, p = p] { return detail_random::random_nonzero_quad(rng, m, p); },
                        [p = p, root = root](const QuadElem& x) { return quad_val_split(x, p, root); }))
                return false;
        }
        ev << "configs=" << configs << " pairs_each=" << trials;
        return configs == 8;
    });

    return runner.out;
}

}  // namespace unitdist
