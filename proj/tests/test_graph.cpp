#include <doctest.h>

#include <random>
#include <set>

#include "specgap/constructions.hpp"
#include "specgap/graph.hpp"
#include "test_util.hpp"

using namespace specgap;

TEST_CASE("from_edge_list builds simple graphs") {
    auto k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.has_edge(1, 0));

    auto p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), InvalidGraph);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 5}}), InvalidGraph);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{-1, 0}}), InvalidGraph);

    // Duplicates collapse.
    auto dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("metrics on named graphs") {
    auto p5 = path_graph(5);
    auto m = metrics(p5);
    CHECK(m.degrees == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(m.volume == 8);
    CHECK(m.max_degree == 2);
    CHECK(m.diameter == 4);
    CHECK(m.connected);

    auto k4 = complete_graph(4);
    auto mk = metrics(k4);
    CHECK(mk.volume == 12);
    CHECK(mk.max_degree == 3);
    CHECK(mk.diameter == 1);

    auto two_parts = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    auto md = metrics(two_parts);
    CHECK_FALSE(md.connected);
    CHECK_FALSE(md.diameter.has_value());
}

TEST_CASE("metrics of DK(8,6) against the BFS oracle") {
    auto g = double_kite(8, 6);
    auto m = metrics(g);
    CHECK(g.vertex_count() == 22);
    CHECK(g.edge_count() == 63);
    CHECK(m.volume == 126);
    CHECK(m.max_degree == 8);
    CHECK(m.diameter == 9);
    CHECK(m.diameter == test_oracle::diameter_oracle(g));

    long long handshake = 0;
    for (int d : m.degrees) handshake += d;
    CHECK(handshake == 2 * g.edge_count());
}

TEST_CASE("bridges on named graphs") {
    auto p4 = path_graph(4);
    CHECK(bridges(p4).size() == 3);

    auto c4 = cycle_graph(4);
    CHECK(bridges(c4).empty());

    // DK(8,6): exactly the 7 path edges bridge the two cliques.
    auto dk = double_kite(8, 6);
    auto b = bridges(dk);
    CHECK(b.size() == 7);
    CHECK(b == test_oracle::bridges_oracle(dk));
    for (auto [u, v] : b) {
        bool touches_path = (u >= 8 && u <= 13) || (v >= 8 && v <= 13) ||
                            ((u == 0 || u == 14) && (v == 0 || v == 14));
        CHECK(touches_path);
    }
}

TEST_CASE("bridges match the deletion oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);
        auto g = test_oracle::random_graph(n, 0.35, rng);
        CHECK(bridges(g) == test_oracle::bridges_oracle(g));
    }
}

TEST_CASE("every tree edge is a bridge") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        auto tree = test_oracle::random_connected_graph(n, 0.0, rng);
        REQUIRE(tree.edge_count() == n - 1);
        CHECK(static_cast<int>(bridges(tree).size()) == n - 1);
    }
}

TEST_CASE("cut_edges_between") {
    CHECK(cut_edges_between(Graph::from_edge_list(2, {{0, 1}}), {0}) == 1);
    CHECK(cut_edges_between(cycle_graph(4), {0, 1}) == 2);

    // One clique plus the first three internal path vertices: the only
    // crossing edge is the next path edge.
    auto dk = double_kite(8, 6);
    std::vector<int> s{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(cut_edges_between(dk, s) == 1);
}

TEST_CASE("structural invariants over random graphs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng() % 14);
        auto g = test_oracle::random_connected_graph(n, 0.2, rng);

        long long degree_sum = 0;
        for (int u = 0; u < n; ++u) {
            degree_sum += g.degree(u);
            CHECK_FALSE(g.has_edge(u, u));
        }
        CHECK(degree_sum == 2 * g.edge_count());

        for (auto [u, v] : g.edges()) CHECK(g.has_edge(v, u));

        auto m = metrics(g);
        REQUIRE(m.connected);
        if (n >= 2) {
            CHECK(*m.diameter >= 1);
            CHECK(*m.diameter <= n - 1);
        }
        CHECK(static_cast<int>(bridges(g).size()) <= n - 1);
    }
}
