#pragma once

#include "unitdist/biquad.hpp"
#include "unitdist/certificate.hpp"
#include "unitdist/chromatic.hpp"
#include "unitdist/f11_table.hpp"
#include "unitdist/geometry.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/numtheory.hpp"
#include "unitdist/parse.hpp"
#include "unitdist/quad.hpp"
#include "unitdist/rational.hpp"
#include "unitdist/reduction.hpp"
#include "unitdist/valuation.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace unitdist {

// ---- named exact constructions ----

inline std::vector<PointT<QuadElem>> fixture_triangle_sqrt3() {
    auto q = [](const Rat& a, const Rat& b) { return QuadElem{3, a, b}; };
    return {
        {q(0, 0), q(0, 0)},
        {q(1, 0), q(0, 0)},
        {q(Rat(1) / 2, 0), q(0, Rat(1) / 2)},
    };
}

inline std::vector<PointT<BiQuadElem>> fixture_moser_spindle() {
    auto b = [](const Rat& a, const Rat& s3, const Rat& s11, const Rat& s33) {
        return BiQuadElem{3, 11, a, s3, s11, s33};
    };
    Rat z = 0;
    return {
        {b(0, z, z, z), b(0, z, z, z)},
        {b(1, z, z, z), b(0, z, z, z)},
        {b(Rat(1) / 2, z, z, z), b(0, Rat(1) / 2, z, z)},
        {b(Rat(3) / 2, z, z, z), b(0, Rat(1) / 2, z, z)},
        {b(Rat(5) / 6, z, z, z), b(0, z, Rat(1) / 6, z)},
        {b(Rat(5) / 12, z, z, Rat(-1) / 12), b(0, Rat(5) / 12, Rat(1) / 12, z)},
        {b(Rat(5) / 4, z, z, Rat(-1) / 12), b(0, Rat(5) / 12, Rat(1) / 4, z)},
    };
}

// The published spindle edge list, as index pairs into fixture_moser_spindle.
inline std::vector<std::pair<int, int>> moser_spindle_edges() {
    return {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}};
}

inline std::vector<PointT<QuadElem>> fixture_c9_sqrt7() {
    auto q = [](const Rat& a, const Rat& b) { return QuadElem{7, a, b}; };
    std::vector<PointT<QuadElem>> pts;
    // Alternating base points (i/4, 0) and raised points ((2i+1)/8, 3 sqrt(7)/8).
    for (int i = 0; i < 9; ++i) {
        if (i % 2 == 0) pts.push_back({q(Rat(i / 2) / 4, 0), q(0, 0)});
        else pts.push_back({q(Rat(i) / 8, 0), q(0, Rat(3) / 8)});
    }
    return pts;
}

inline std::vector<PointT<QuadElem>> fixture_c5_sqrt_neg5() {
    auto q = [](const Rat& a, const Rat& b) { return QuadElem{-5, a, b}; };
    return {
        {q(0, 0), q(0, 0)},
        {q(1, 0), q(0, 0)},
        {q(2, 0), q(0, 0)},
        {q(3, 0), q(0, 0)},
        {q(Rat(3) / 2, 0), q(0, Rat(1) / 2)},
    };
}

// (k+2)-cycle under the form (1, -1): base points (i, 0) for 0 <= i <= k,
// plus the apex (k/2, sqrt(k^2-4)/2), written over Q(sqrt m) for the
// squarefree part m of k^2 - 4.
inline std::vector<PointT<QuadElem>> fixture_lorentz_cycle(int k) {
    if (k < 3) throw std::invalid_argument("lorentz cycle needs k >= 3");
    long long disc = static_cast<long long>(k) * k - 4;
    long long m = squarefree_part(disc);
    Int c2 = disc / m;
    Int c = int_sqrt(c2);
    auto q = [m](const Rat& a, const Rat& b) { return QuadElem{m, a, b}; };
    std::vector<PointT<QuadElem>> pts;
    for (int i = 0; i <= k; ++i) pts.push_back({q(i, 0), q(0, 0)});
    pts.push_back({q(Rat(k) / 2, 0), q(0, Rat(c) / 2)});
    return pts;
}

inline std::vector<PointT<Rat>> fixture_lorentz_rational_4cycle() {
    return {
        {Rat(0), Rat(0)},
        {Rat(1), Rat(0)},
        {Rat(9) / 4, Rat(3) / 4},
        {Rat(5) / 4, Rat(3) / 4},
    };
}

// 16-vertex quotient of the Q(sqrt 2) plane by the "same coordinate class"
// relation, with classes 0, 1, U = (1/2) sqrt(2), V = 1 + (1/2) sqrt(2).
// Edges are computed by exact valuation: x ~ y iff v(q(y - x) - 1) >= 1.
struct Sqrt2QuotientFixture {
    UGraph graph;               // labels like "0V", "UU"
    Coloring two_coloring;      // proper 2-coloring of the quotient
    std::vector<QuadElem> class_values;  // representative per class 0,1,U,V
};

inline Sqrt2QuotientFixture fixture_sqrt2_quotient() {
    Sqrt2QuotientFixture fx;
    fx.class_values = {
        QuadElem{2, 0, 0},
        QuadElem{2, 1, 0},
        QuadElem{2, 0, Rat(1) / 2},
        QuadElem{2, 1, Rat(1) / 2},
    };
    fx.graph = UGraph(16);
    fx.graph.labels.resize(16);
    for (int i = 0; i < 16; ++i)
        fx.graph.labels[i] = std::string(sqrt2_class_name(i / 4)) + sqrt2_class_name(i % 4);
    QuadElem one{2, 1, 0};
    for (int i = 0; i < 16; ++i) {
        for (int j = i + 1; j < 16; ++j) {
            QuadElem dx = fx.class_values[j / 4] - fx.class_values[i / 4];
            QuadElem dy = fx.class_values[j % 4] - fx.class_values[i % 4];
            QuadElem q = dx * dx + dy * dy - one;
            if (quad_val_ramified(q, 2) >= HalfVal::from_half(2)) fx.graph.add_edge(i, j);
        }
    }
    fx.graph.finalize();
    fx.two_coloring.k = 2;
    fx.two_coloring.assignment.resize(16);
    for (int i = 0; i < 16; ++i)
        fx.two_coloring.assignment[i] = kSqrt2QuotientColor[i / 4][i % 4];
    return fx;
}

struct UnitIdentityFixture {
    BiQuadElem unit;          // 23 + 4 sqrt(33)
    BiQuadElem unit_inverse;  // 23 - 4 sqrt(33)
    BiQuadElem pi;            // -5/2 - sqrt(3)/2 + sqrt(11)/2 + sqrt(33)/2
    BiQuadElem pi_conj;       // -5/2 + sqrt(3)/2 - sqrt(11)/2 + sqrt(33)/2
};

inline UnitIdentityFixture fixture_unit_identity() {
    Rat h = Rat(1) / 2;
    return {
        BiQuadElem{3, 11, 23, 0, 0, 4},
        BiQuadElem{3, 11, 23, 0, 0, -4},
        BiQuadElem{3, 11, Rat(-5) / 2, -h, h, h},
        BiQuadElem{3, 11, Rat(-5) / 2, h, -h, h},
    };
}

// ---- canonical serializations (SHA-256 of these is pinned in tests) ----

inline std::string fixture_names_help() {
    return "triangle_sqrt3, moser_spindle, c9_sqrt7, c5_sqrt_neg5, lorentz_cycle_3..lorentz_cycle_10, "
           "lorentz_rational_4cycle, f11_table, sqrt2_quotient, unit_identity";
}

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> names = {"triangle_sqrt3", "moser_spindle", "c9_sqrt7", "c5_sqrt_neg5"};
    for (int k = 3; k <= 10; ++k) names.push_back("lorentz_cycle_" + std::to_string(k));
    names.push_back("lorentz_rational_4cycle");
    names.push_back("f11_table");
    names.push_back("sqrt2_quotient");
    names.push_back("unit_identity");
    return names;
}

inline std::string fixture_canonical_serialization(const std::string& name) {
    std::ostringstream os;
    auto emit_points = [&os](const auto& pts) {
        for (const auto& p : pts) os << serialize_point(p) << "\n";
    };
    if (name == "triangle_sqrt3") emit_points(fixture_triangle_sqrt3());
    else if (name == "moser_spindle") emit_points(fixture_moser_spindle());
    else if (name == "c9_sqrt7") emit_points(fixture_c9_sqrt7());
    else if (name == "c5_sqrt_neg5") emit_points(fixture_c5_sqrt_neg5());
    else if (name.rfind("lorentz_cycle_", 0) == 0)
        emit_points(fixture_lorentz_cycle(std::stoi(name.substr(14))));
    else if (name == "lorentz_rational_4cycle") emit_points(fixture_lorentz_rational_4cycle());
    else if (name == "f11_table") {
        for (int u = 0; u < 11; ++u) {
            for (int v = 0; v < 11; ++v) os << (v ? " " : "") << kF11Table[u][v];
            os << "\n";
        }
    } else if (name == "sqrt2_quotient") {
        auto fx = fixture_sqrt2_quotient();
        for (int i = 0; i < fx.graph.n; ++i)
            os << "v " << fx.graph.labels[i] << " " << fx.two_coloring.assignment[i] << "\n";
        os << to_dimacs(fx.graph);
    } else if (name == "unit_identity") {
        auto fx = fixture_unit_identity();
        os << serialize_biquad(fx.unit) << "\n" << serialize_biquad(fx.unit_inverse) << "\n"
           << serialize_biquad(fx.pi) << "\n" << serialize_biquad(fx.pi_conj) << "\n";
    } else {
        throw std::invalid_argument("unknown fixture '" + name + "' (known: " + fixture_names_help() + ")");
    }
    return os.str();
}

inline std::string fixture_sha256(const std::string& name) {
    return detail::sha256_hex(fixture_canonical_serialization(name));
}

// ---- deterministic random elements for the statistical claims ----

namespace detail_random {

using Rng = std::mt19937_64;

// Bounded-height rational; denominators mix in powers of p so that
// non-integral inputs are exercised.
inline Rat random_rat(Rng& rng, long long p) {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    std::uniform_int_distribution<int> pexp(0, 2);
    long long d = den(rng);
    for (int e = pexp(rng); e > 0; --e) d *= p;
    return make_rat(num(rng), d);
}

inline Rat random_nonzero_rat(Rng& rng, long long p) {
    for (;;) {
        Rat r = random_rat(rng, p);
        if (r != 0) return r;
    }
}

inline QuadElem random_quad(Rng& rng, long long m, long long p) {
    return QuadElem{m, random_rat(rng, p), random_rat(rng, p)};
}

inline QuadElem random_nonzero_quad(Rng& rng, long long m, long long p) {
    for (;;) {
        QuadElem x = random_quad(rng, m, p);
        if (!x.is_zero()) return x;
    }
}

}  // namespace detail_random

// ---- the one-shot claim suite ----

enum class ClaimStatus { Pass, Fail, Skipped };

struct PaperClaim {
    std::string id;
    std::string description;
    ClaimStatus status = ClaimStatus::Skipped;
    std::string evidence;
    // Wall-clock time spent on the check. Reported alongside the evidence but
    // kept out of it so reports are byte-identical across runs.
    double elapsed_seconds = 0.0;
};

inline const char* claim_status_str(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "PASS";
        case ClaimStatus::Fail: return "FAIL";
        case ClaimStatus::Skipped: return "SKIPPED(budget)";
    }
    return "?";
}

namespace detail_claims {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// True iff the graph is a single n-cycle.
inline bool is_cycle_graph(const UGraph& g) {
    if (g.n < 3 || g.edge_count() != static_cast<std::size_t>(g.n)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    std::vector<char> seen(g.n, 0);
    int cur = 0, prev = -1, steps = 0;
    while (!seen[cur]) {
        seen[cur] = 1;
        ++steps;
        int next = (g.adj[cur][0] == prev) ? g.adj[cur][1] : g.adj[cur][0];
        prev = cur;
        cur = next;
    }
    return cur == 0 && steps == g.n;
}

}  // namespace detail_claims

std::vector<PaperClaim> verify_paper(double budget_seconds = 3600.0);

}  // namespace unitdist

#include "unitdist/verify_paper_impl.hpp"
