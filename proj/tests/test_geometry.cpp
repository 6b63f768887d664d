#include "unitdist/geometry.hpp"
#include "unitdist/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unitdist;

TEST_CASE("diagonal forms validate") {
    CHECK(DiagForm::euclidean(2).coeffs == std::vector<long long>{1, 1});
    CHECK(DiagForm::lorentz().coeffs == std::vector<long long>{1, -1});
    CHECK_THROWS_AS(DiagForm({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(DiagForm({}), std::invalid_argument);
}

TEST_CASE("unit circles over small prime fields") {
    auto s3 = unit_sphere_fp(3, 2, DiagForm::euclidean(2));
    std::vector<std::vector<long long>> want = {{0, 1}, {0, 2}, {1, 0}, {2, 0}};
    CHECK(s3 == want);
    CHECK(unit_sphere_fp(5, 2, DiagForm::euclidean(2)).size() == 4);    // 5 - (+1)
    CHECK(unit_sphere_fp(7, 2, DiagForm::euclidean(2)).size() == 8);    // 7 - (-1)
    CHECK(unit_sphere_fp(11, 2, DiagForm::euclidean(2)).size() == 12);  // 11 - (-1)
}

TEST_CASE("finite plane graphs") {
    UGraph g = build_fp_graph(3, 2, DiagForm::euclidean(2));
    CHECK(g.n == 9);
    CHECK(g.edge_count() == 18);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 4);
    CHECK(g.labels[0] == "0,0");
    CHECK(g.labels[5] == "1,2");
    CHECK(g.adjacent(0, 1));       // (0,0)-(0,1)
    CHECK(g.adjacent(0, 2));       // (0,0)-(0,2), difference (0,2), 4 = 1 (mod 3)
    CHECK_FALSE(g.adjacent(0, 4)); // (0,0)-(1,1)
}

TEST_CASE("exact graphs over a quadratic field") {
    std::vector<PointT<QuadElem>> tri = {
        {QuadElem{3, 0, 0}, QuadElem{3, 0, 0}},
        {QuadElem{3, 1, 0}, QuadElem{3, 0, 0}},
        {QuadElem{3, make_rat(1, 2), 0}, QuadElem{3, 0, make_rat(1, 2)}},
    };
    UGraph g = build_exact_graph(tri, DiagForm::euclidean(2));
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 3);
    CHECK(to_dimacs(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("circle parametrization produces unit vectors") {
    auto p = circle_param(make_rat(1, 2));
    CHECK(p[0] == make_rat(3, 5));
    CHECK(p[1] == make_rat(4, 5));
    CHECK(form_value(DiagForm::euclidean(2), p) == Rat(1));

    QuadElem t{2, make_rat(1, 3), make_rat(2, 5)};
    auto q = circle_param(t);
    CHECK(form_value(DiagForm::euclidean(2), q) == QuadElem(2, 1, 0));
}

TEST_CASE("rotations fixing the form") {
    PointT<Rat> v = {make_rat(3, 5), make_rat(4, 5)};
    auto rot = rotate_to_e1(v);
    auto e1 = rot.apply(v);
    CHECK(e1[0] == Rat(1));
    CHECK(e1[1] == Rat(0));

    PointT<Rat> x = {make_rat(7, 2), make_rat(-1, 3)};
    auto y = rot.apply(x);
    CHECK(form_value(DiagForm::euclidean(2), y) == form_value(DiagForm::euclidean(2), x));
    auto back = rot.transpose().apply(y);
    CHECK(back[0] == x[0]);
    CHECK(back[1] == x[1]);

    CHECK_THROWS_AS(rotate_to_e1(PointT<Rat>{Rat(1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("dimacs round trip") {
    UGraph g = build_fp_graph(3, 2, DiagForm::euclidean(2));
    std::string text = to_dimacs(g);
    UGraph h = parse_dimacs(text);
    CHECK(h.n == g.n);
    CHECK(h.edges == g.edges);
    CHECK(dimacs_sha256(h) == dimacs_sha256(g));

    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), std::invalid_argument);
}

TEST_CASE("graph construction guards") {
    UGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    g.add_edge(2, 0);
    g.add_edge(0, 2);  // duplicate, keeps one copy
    g.finalize();
    CHECK(g.edge_count() == 1);
    CHECK(g.edges[0] == std::pair<int, int>{0, 2});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
}

TEST_CASE("sha256 of known vectors") {
    CHECK(detail::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(detail::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
