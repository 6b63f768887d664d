#pragma once

#include "unitdist/chromatic.hpp"
#include "unitdist/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>

namespace unitdist {

// Machine-checkable chromatic-number certificate. Field order is fixed;
// vertex arrays are 0-indexed by the graph's lexicographic vertex order.
inline nlohmann::ordered_json certificate_json(const UGraph& g, const ChiCertificate& cert) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["graph"] = {{"n", g.n}, {"m", g.edges.size()}, {"dimacs_sha256", dimacs_sha256(g)}};
    j["chi"] = cert.chi;
    j["upper"] = {{"k", cert.upper.k}, {"colors", cert.upper.assignment}};
    nlohmann::ordered_json lower;
    if (const auto* cl = std::get_if<CliqueWitness>(&cert.lower)) {
        lower["kind"] = "clique";
        lower["witness"] = cl->vertices;
        lower["k"] = cl->vertices.size();
        lower["nodes"] = 0;
    } else if (const auto* oc = std::get_if<OddCycleWitness>(&cert.lower)) {
        lower["kind"] = "odd_cycle";
        lower["witness"] = oc->vertices;
        lower["k"] = 3;
        lower["nodes"] = 0;
    } else {
        const auto& un = std::get<UnsatWitness>(cert.lower);
        lower["kind"] = "exhaustive_unsat";
        lower["witness"] = nlohmann::ordered_json::array();
        lower["k"] = un.k;
        lower["nodes"] = un.nodes;
    }
    j["lower"] = lower;
    return j;
}

struct CertCheckReport {
    bool ok = false;
    std::string message;
};

// Independent audit of a certificate against a graph. Checks structure and
// witnesses directly from the adjacency; shares nothing with the solver.
inline CertCheckReport check_certificate(const UGraph& g, const nlohmann::json& j) {
    auto fail = [](const std::string& m) { return CertCheckReport{false, m}; };
    try {
        if (j.at("version").get<int>() != 1) return fail("unsupported certificate version");
        const auto& jg = j.at("graph");
        if (jg.at("n").get<int>() != g.n) return fail("vertex count mismatch");
        if (jg.at("m").get<std::size_t>() != g.edges.size()) return fail("edge count mismatch");
        if (jg.at("dimacs_sha256").get<std::string>() != dimacs_sha256(g))
            return fail("graph fingerprint mismatch");

        int chi = j.at("chi").get<int>();
        const auto& ju = j.at("upper");
        if (ju.at("k").get<int>() != chi) return fail("upper bound does not match chi");
        Coloring upper{ju.at("colors").get<std::vector<int>>(), chi};
        if (static_cast<int>(upper.assignment.size()) != g.n)
            return fail("upper coloring is not total");
        for (int c : upper.assignment)
            if (c < 0 || c >= chi) return fail("upper coloring uses a color outside [0, chi)");
        if (!verify_coloring(g, upper)) return fail("upper coloring is not proper");

        const auto& jl = j.at("lower");
        std::string kind = jl.at("kind").get<std::string>();
        auto witness = jl.at("witness").get<std::vector<int>>();
        for (int v : witness)
            if (v < 0 || v >= g.n) return fail("witness vertex out of range");
        if (kind == "clique") {
            if (static_cast<int>(witness.size()) != chi)
                return fail("clique witness size does not match chi");
            for (std::size_t a = 0; a < witness.size(); ++a)
                for (std::size_t b = a + 1; b < witness.size(); ++b) {
                    if (witness[a] == witness[b]) return fail("clique witness repeats a vertex");
                    if (!g.adjacent(witness[a], witness[b]))
                        return fail("clique witness pair not adjacent");
                }
        } else if (kind == "odd_cycle") {
            if (chi != 3) return fail("odd-cycle witness only certifies chi = 3");
            if (witness.size() < 3 || witness.size() % 2 == 0)
                return fail("odd-cycle witness must have odd length >= 3");
            std::vector<int> sorted = witness;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                return fail("odd-cycle witness repeats a vertex");
            for (std::size_t i = 0; i < witness.size(); ++i)
                if (!g.adjacent(witness[i], witness[(i + 1) % witness.size()]))
                    return fail("odd-cycle witness has a non-edge step");
        } else if (kind == "exhaustive_unsat") {
            if (jl.at("k").get<int>() != chi - 1)
                return fail("exhaustive-unsat witness must target chi - 1");
        } else {
            return fail("unknown lower-witness kind '" + kind + "'");
        }
        return CertCheckReport{true, "certificate valid"};
    } catch (const nlohmann::json::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    } catch (const std::exception& e) {
        return fail(std::string("certificate check failed: ") + e.what());
    }
}

}  // namespace unitdist
