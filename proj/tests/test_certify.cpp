#include <catch2/catch_amalgamated.hpp>

#include "plane21/certify.hpp"
#include "builders.hpp"

using namespace plane21;
using namespace plane21::testing;

static NiceDecomposition triangle_cert() {
    NiceDecomposition c;
    c.matching = {{0, 1}};
    c.arcs = {{2, 0}, {2, 1}};
    c.order = {0, 1, 2};
    c.boundary = vpair{0, 1};
    return c;
}

TEST_CASE("verifier accepts the triangle certificate") {
    CHECK(verify_nice(triangle_xyz(), triangle_cert()).ok);
}

TEST_CASE("verifier rejects a reversed arc at the boundary") {
    auto c = triangle_cert();
    c.arcs = {{0, 2}, {2, 1}};
    c.order = {1, 2, 0};
    auto v = verify_nice(triangle_xyz(), c);
    REQUIRE_FALSE(v.ok);
    bool mentions_sink = false;
    for (auto& s : v.violations)
        if (s.find("boundary vertex 0 has out-degree 1") != std::string::npos)
            mentions_sink = true;
    CHECK(mentions_sink);
}

TEST_CASE("verifier rejects a vertex in two matching edges") {
    auto g = cycle_graph(4); // 0-1-2-3
    NiceDecomposition c;
    c.matching = {{0, 1}, {1, 2}};
    c.arcs = {{2, 3}, {3, 0}};
    c.order = {0, 2, 3, 1};
    c.boundary = vpair{0, 1};
    auto v = verify_nice(g, c);
    REQUIRE_FALSE(v.ok);
    bool twice = false;
    for (auto& s : v.violations)
        if (s.find("lies in 2 matching edges") != std::string::npos) twice = true;
    CHECK(twice);
}

TEST_CASE("verifier requires an exact edge partition") {
    SECTION("edge covered twice") {
        auto c = triangle_cert();
        c.arcs.push_back({2, 0});
        CHECK_FALSE(verify_nice(triangle_xyz(), c).ok);
    }
    SECTION("edge missing") {
        auto c = triangle_cert();
        c.arcs.pop_back();
        CHECK_FALSE(verify_nice(triangle_xyz(), c).ok);
    }
    SECTION("non-edge in certificate") {
        auto g = cycle_graph(4);
        NiceDecomposition c;
        c.matching = {{0, 1}};
        c.arcs = {{2, 0}, {2, 3}, {3, 0}};
        c.order = {0, 1, 3, 2};
        c.boundary = vpair{0, 1};
        // 2-0 is not an edge of C4
        CHECK_FALSE(verify_nice(g, c).ok);
    }
}

TEST_CASE("verifier catches cyclic orientations twice over") {
    auto g = triangle_xyz();
    NiceDecomposition c;
    c.matching = {};
    c.arcs = {{0, 1}, {1, 2}, {2, 0}};
    c.order = {0, 1, 2};
    c.boundary = vpair{0, 1};
    auto v = verify_nice(g, c);
    REQUIRE_FALSE(v.ok);
    int order_fails = 0, cycle_fails = 0;
    for (auto& s : v.violations) {
        if (s.find("does not point backwards") != std::string::npos) order_fails++;
        if (s.find("directed cycle") != std::string::npos) cycle_fails++;
    }
    CHECK(order_fails >= 1);
    CHECK(cycle_fails == 1);
}

TEST_CASE("peel order puts sinks first, least id breaking ties") {
    SECTION("triangle") {
        auto r = peel_order(triangle_xyz(), triangle_cert());
        REQUIRE(r.order.has_value());
        CHECK(*r.order == std::vector<vertex>{0, 1, 2});
    }
    SECTION("empty orientation") {
        auto r = peel_order(std::vector<vertex>{3, 1, 2}, {});
        REQUIRE(r.order.has_value());
        CHECK(r.order->size() == 3);
    }
    SECTION("directed chain") {
        auto r = peel_order(std::vector<vertex>{1, 2, 3}, {{1, 2}, {2, 3}});
        REQUIRE(r.order.has_value());
        CHECK(*r.order == std::vector<vertex>{3, 2, 1});
    }
    SECTION("cyclic arcs give a cycle witness") {
        auto r = peel_order(std::vector<vertex>{0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
        REQUIRE_FALSE(r.order.has_value());
        CHECK(r.cycle.size() == 3);
    }
}

TEST_CASE("greedy coloring of the triangle matches the worked run") {
    auto col = greedy_color(triangle_xyz(), triangle_cert());
    CHECK(col.color.at(0) == 1);
    CHECK(col.color.at(1) == 1);
    CHECK(col.color.at(2) == 2);
    REQUIRE(col.defects.size() == 1);
    CHECK(col.defects[0] == vpair{0, 1});
    CHECK(validate_coloring(triangle_xyz(), triangle_cert(), col).ok);
}

TEST_CASE("single matched edge colors both endpoints alike") {
    auto g = single_edge();
    NiceDecomposition c;
    c.matching = {{0, 1}};
    c.order = {0, 1};
    c.boundary = vpair{0, 1};
    auto col = greedy_color(g, c);
    CHECK(col.color.at(0) == 1);
    CHECK(col.color.at(1) == 1);
    REQUIRE(col.defects.size() == 1);
}

TEST_CASE("list assignment validation") {
    auto g = triangle_xyz();
    ListAssignment bad = {{0, {1, 2}}, {1, {1, 2, 3}}, {2, {1, 2, 3}}};
    CHECK_THROWS_AS(greedy_color(g, triangle_cert(), bad), argument_error);
    ListAssignment missing = {{0, {1, 2, 3}}, {1, {1, 2, 3}}};
    CHECK_THROWS_AS(greedy_color(g, triangle_cert(), missing), argument_error);
}

TEST_CASE("greedy coloring succeeds on random 3-lists") {
    // oracle certificates over a few small plane graphs, then random lists
    std::vector<PlaneGraph> graphs;
    graphs.push_back(cycle_graph(5));
    graphs.push_back(cycle_graph(8));
    graphs.push_back(bad5_gadget());
    TestRng rng(2024);
    for (auto& g : graphs) {
        vpair e = g.edges().front();
        auto cert = oracle_nice(g, e);
        REQUIRE(cert.has_value());
        REQUIRE(verify_nice(g, *cert).ok);
        for (int trial = 0; trial < 200; ++trial) {
            ListAssignment lists;
            for (vertex v : g.vertices()) {
                std::set<int> ls;
                while (ls.size() < 3) ls.insert(rng.below(9));
                lists[v] = std::vector<int>(ls.begin(), ls.end());
            }
            auto col = greedy_color(g, *cert, lists);
            auto verdict = validate_coloring(g, *cert, col);
            INFO(verdict.text());
            REQUIRE(verdict.ok);
            for (auto& [v, c] : col.color) {
                auto& l = lists[v];
                CHECK(std::find(l.begin(), l.end(), c) != l.end());
            }
        }
    }
}

TEST_CASE("oracle on the triangle") {
    auto g = triangle_xyz();
    auto c = oracle_nice(g, {0, 1});
    REQUIRE(c.has_value());
    NiceDecomposition want = triangle_cert();
    want.canonicalize();
    CHECK(c->matching == want.matching);
    CHECK(c->arcs == want.arcs);
    CHECK(c->order == want.order);
}

TEST_CASE("oracle on C4 succeeds") {
    auto g = cycle_graph(4);
    auto c = oracle_nice(g, {0, 1});
    REQUIRE(c.has_value());
    CHECK(verify_nice(g, *c).ok);
}

TEST_CASE("oracle decides the claw with a leaf boundary edge") {
    // star: center 0, leaves 1, 2, 3; boundary edge (0, 1)
    std::map<vertex, std::vector<vertex>> rot = {
        {0, {1, 2, 3}}, {1, {0}}, {2, {0}}, {3, {0}}};
    auto g = PlaneGraph::build(rot, std::nullopt, vpair{0, 1});
    auto c = oracle_nice(g, {0, 1});
    REQUIRE(c.has_value());
    CHECK(verify_nice(g, *c).ok);
}

TEST_CASE("oracle refuses oversized graphs") {
    auto g = cycle_graph(15);
    CHECK_THROWS_AS(oracle_nice(g, {0, 1}), argument_error);
}
