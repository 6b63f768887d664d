#include "unitdist/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unitdist;

TEST_CASE("fixture inventory") {
    auto names = fixture_names();
    CHECK(names.size() == 16);
    for (const auto& name : names) CHECK_FALSE(fixture_canonical_serialization(name).empty());
    CHECK_THROWS_AS(fixture_canonical_serialization("nope"), std::invalid_argument);
}

TEST_CASE("triangle fixture serializes to its exact literals") {
    CHECK(fixture_canonical_serialization("triangle_sqrt3") ==
          "0; 0\n"
          "1; 0\n"
          "1/2; 1/2*sqrt(3)\n");
}

TEST_CASE("spindle fixture has seven points over the right field") {
    auto pts = fixture_moser_spindle();
    REQUIRE(pts.size() == 7);
    for (const auto& p : pts) {
        REQUIRE(p.size() == 2);
        CHECK(p[0].m1 == 3);
        CHECK(p[0].m2 == 11);
    }
    CHECK(pts[4][0] == BiQuadElem(3, 11, make_rat(5, 6), 0, 0, 0));
    CHECK(pts[4][1] == BiQuadElem(3, 11, 0, 0, make_rat(1, 6), 0));
    CHECK(moser_spindle_edges().size() == 11);
}

TEST_CASE("first row of the 11x11 table") {
    std::vector<int> first(kF11Table[0], kF11Table[0] + 11);
    CHECK(first == std::vector<int>{3, 1, 0, 2, 1, 2, 3, 4, 2, 0, 1});
}

TEST_CASE("lorentz cycle with k=3 is the expected five points") {
    auto pts = fixture_lorentz_cycle(3);
    REQUIRE(pts.size() == 5);
    CHECK(pts[0][0] == QuadElem(5, 0, 0));
    CHECK(pts[3][0] == QuadElem(5, 3, 0));
    CHECK(pts[4][0] == QuadElem(5, make_rat(3, 2), 0));
    CHECK(pts[4][1] == QuadElem(5, 0, make_rat(1, 2)));
    CHECK_THROWS_AS(fixture_lorentz_cycle(2), std::invalid_argument);

    // k = 6: 32 = 16 * 2, apex (3, 2 sqrt 2)
    auto p6 = fixture_lorentz_cycle(6);
    REQUIRE(p6.size() == 8);
    CHECK(p6[7][0] == QuadElem(2, 3, 0));
    CHECK(p6[7][1] == QuadElem(2, 0, 2));
}

TEST_CASE("sqrt2 quotient fixture") {
    auto fx = fixture_sqrt2_quotient();
    CHECK(fx.graph.n == 16);
    CHECK(fx.graph.edge_count() == 32);
    CHECK(fx.graph.labels[0] == "00");
    CHECK(fx.graph.labels[15] == "VV");
    CHECK(verify_coloring(fx.graph, fx.two_coloring));
    // every vertex sees both colors equally: the graph is 4-regular and bipartite
    for (int v = 0; v < 16; ++v) CHECK(fx.graph.degree(v) == 4);
    CHECK(structure_probe(fx.graph).is_bipartite);
}

TEST_CASE("unit identity fixture") {
    auto fx = fixture_unit_identity();
    BiQuadElem one{3, 11, 1, 0, 0, 0}, eleven{3, 11, 11, 0, 0, 0};
    CHECK(fx.unit * fx.unit_inverse == one);
    CHECK(fx.unit * fx.pi * fx.pi * fx.pi_conj * fx.pi_conj == eleven);
    CHECK(biquad_norm(fx.unit) == Rat(1));
}

TEST_CASE("fixture serializations are pinned") {
    // SHA-256 of each fixture's canonical serialization. These constants pin
    // the exact literals; any change to a fixture or its serialization is a
    // deliberate, reviewed event.
    const std::vector<std::pair<std::string, std::string>> pins = {
        {"triangle_sqrt3",
         "3587a2399fadf69cd10b59acd32c14bb83c7e931c8d9edf25f9f9b56aed65d42"},
        {"moser_spindle",
         "ed38b73dee7f085e1e80843bc14f84249a6fc38334831915dd8e6d3d9b3c6b04"},
        {"c9_sqrt7",
         "91ed9211bc6fdf0dad6be47c30a76cb8aace2a591967d613c690e476af2dcb7f"},
        {"c5_sqrt_neg5",
         "b1c0180953c136e62a8b96baff5749bc8ab5efe148e818502402134238e4d5f7"},
        {"lorentz_cycle_3",
         "9a0c496a346760fbead72a69ec975515a99133cf7b7b6c6e048e25fc2855876c"},
        {"lorentz_cycle_4",
         "5bb139e7bbce906435f1558b30988cdd76e632ccfcf476d50c893bad9ff61fdf"},
        {"lorentz_cycle_5",
         "c60e7206da2887668d56e950cb3b9b8b5af7e60f0162206c9fd828b1646eeabd"},
        {"lorentz_cycle_6",
         "fd581daa77b7ebf79f86c8935f04bf0473af116fe4b8112376f8031b55c0c779"},
        {"lorentz_cycle_7",
         "789a7f4aa2055ae24727e854ce16e044635c5cf926a3c2af8e88d9562bdf7045"},
        {"lorentz_cycle_8",
         "272a3a6569f7db73ebadcb07e5c9225c3e0a0bd6a697d77ae4cc17b4042552c2"},
        {"lorentz_cycle_9",
         "6694a8387848fad0a80e61843169e32ae5ca97da0ce33ef81a784b6b08c28888"},
        {"lorentz_cycle_10",
         "c47a30d0517dc75bfa3f4d01d29e858b7594b1cf3e63e02a58cf88dc6d029cd1"},
        {"lorentz_rational_4cycle",
         "ce03e8cbdc44ad4ad838fd983f020d5cae017a482e55b722a532cbf91529dbb3"},
        {"f11_table",
         "d10a69acfb2702b1a4e82c1a1d6be42e2de623472d9033890374e7fdd294e9aa"},
        {"sqrt2_quotient",
         "b69ca5dac49396c7b9ab5da45b04f3bf35df13420cf8c31ee9fa845a0f89f797"},
        {"unit_identity",
         "3d2e418c4efd0f471e2dfc2493391b8b5e97f3edd5138dcbda956828ca8d0c1d"},
    };
    for (const auto& [name, sha] : pins) {
        INFO(name);
        CHECK(fixture_sha256(name) == sha);
    }
}
