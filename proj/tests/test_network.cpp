#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "lahnet/combinatorics.hpp"
#include "lahnet/exact_matrix.hpp"
#include "lahnet/lah.hpp"
#include "lahnet/network.hpp"

using lahnet::BigInt;
using lahnet::Edge;
using lahnet::ExactMatrix;
using lahnet::Network;

TEST_CASE("order-1 network is a single weighted edge") {
    const Network net = lahnet::lah_network(1);
    CHECK(net.n() == 1);
    CHECK(net.vertex_count() == 2);
    REQUIRE(net.edges().size() == 1);
    CHECK(net.label(net.edges()[0].tail) == "a1");
    CHECK(net.label(net.edges()[0].head) == "b1");
    CHECK(net.edges()[0].weight == 1);
}

TEST_CASE("order-2 network matches the layered construction") {
    const Network net = lahnet::lah_network(2);
    CHECK(net.vertex_count() == 5);
    REQUIRE(net.edges().size() == 4);

    auto weight_of = [&](const char* tail, const char* head) {
        const auto t = net.find_vertex(tail);
        const auto h = net.find_vertex(head);
        REQUIRE(t.has_value());
        REQUIRE(h.has_value());
        const auto e = net.find_edge(*t, *h);
        REQUIRE(e.has_value());
        return net.edges()[*e].weight;
    };
    CHECK(weight_of("a1", "b1") == 1);
    CHECK(weight_of("a2", "u[2,1]") == 1);
    CHECK(weight_of("u[2,1]", "b2") == 1);
    CHECK(weight_of("u[2,1]", "b1") == 2);

    CHECK_FALSE(net.find_vertex("u[9,9]").has_value());
    CHECK_FALSE(net.find_edge(net.source(1), net.source(2)).has_value());
}

TEST_CASE("unit network repeats the topology with unit weights") {
    const Network lah = lahnet::lah_network(4);
    const Network unit = lahnet::unit_network(4);
    REQUIRE(lah.edges().size() == unit.edges().size());
    for (std::size_t e = 0; e < lah.edges().size(); ++e) {
        CHECK(lah.edges()[e].tail == unit.edges()[e].tail);
        CHECK(lah.edges()[e].head == unit.edges()[e].head);
        CHECK(unit.edges()[e].weight == 1);
    }
}

TEST_CASE("weight matrix equals the Lah matrix") {
    CHECK(lahnet::weight_matrix(lahnet::lah_network(1)) == ExactMatrix(1, 1, {BigInt(1)}));
    CHECK(lahnet::weight_matrix(lahnet::lah_network(3)) ==
          ExactMatrix::from_rows({{BigInt(1), BigInt(0), BigInt(0)},
                                  {BigInt(2), BigInt(1), BigInt(0)},
                                  {BigInt(6), BigInt(6), BigInt(1)}}));
    CHECK(lahnet::weight_matrix(lahnet::lah_network(6)).at(6, 1) == 720);
    for (std::size_t n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(lahnet::weight_matrix(lahnet::lah_network(n)) == lahnet::lah_matrix(n).matrix());
    }
}

TEST_CASE("unit weights give the binomial matrix") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const ExactMatrix W = lahnet::weight_matrix(lahnet::unit_network(n));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                CAPTURE(n, i, j);
                CHECK(W.at(i, j) == lahnet::binomial(i - 1, j - 1));
            }
    }
    CHECK(lahnet::weight_matrix(lahnet::unit_network(4)).at(4, 2) == 3);
    CHECK(lahnet::weight_matrix(lahnet::unit_network(3)).at(3, 3) == 1);
}

TEST_CASE("weight matrix is lower triangular") {
    const ExactMatrix W = lahnet::weight_matrix(lahnet::lah_network(6));
    for (std::size_t i = 1; i <= 6; ++i)
        for (std::size_t j = i + 1; j <= 6; ++j) CHECK(W.at(i, j) == 0);
}

TEST_CASE("path enumeration") {
    const Network net = lahnet::lah_network(5);
    SECTION("census for a_5 -> b_3") {
        const auto paths = lahnet::enumerate_paths(net, 5, 3);
        CHECK(paths.size() == 6);
        for (const auto& p : paths) CHECK(lahnet::path_weight(net, p) == 20);
    }
    SECTION("no paths above the diagonal") {
        CHECK(lahnet::enumerate_paths(net, 2, 4).empty());
    }
    SECTION("single all-horizontal path on the diagonal") {
        const auto paths = lahnet::enumerate_paths(lahnet::lah_network(4), 4, 4);
        REQUIRE(paths.size() == 1);
        CHECK(lahnet::path_weight(lahnet::lah_network(4), paths[0]) == 1);
    }
    SECTION("deterministic order") {
        CHECK(lahnet::enumerate_paths(net, 5, 2) == lahnet::enumerate_paths(net, 5, 2));
    }
    SECTION("count guard") {
        CHECK_THROWS_AS(lahnet::enumerate_paths(net, 5, 3, 5), lahnet::GuardError);
    }
    SECTION("count matches the closed form") {
        for (std::size_t m = 1; m <= 5; ++m)
            for (std::size_t k = 1; k <= m; ++k)
                CHECK(lahnet::count_paths(net, m, k) == lahnet::binomial(m - 1, k - 1));
    }
}

TEST_CASE("enumeration totals agree with the weight matrix") {
    for (std::size_t n : {std::size_t(3), std::size_t(6)}) {
        const Network net = lahnet::lah_network(n);
        const ExactMatrix W = lahnet::weight_matrix(net);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                BigInt total = 0;
                for (const auto& p : lahnet::enumerate_paths(net, i, j))
                    total += lahnet::path_weight(net, p);
                CAPTURE(n, i, j);
                CHECK(total == W.at(i, j));
            }
    }
}

TEST_CASE("paths from a_m to b_k carry the predicted shape") {
    // In the row-weighted network every diagonal edge has weight >= 2 and
    // every horizontal edge weight 1, so weights classify edge kinds.
    const std::size_t n = 6;
    const Network net = lahnet::lah_network(n);
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 1; k <= m; ++k) {
            for (const auto& p : lahnet::enumerate_paths(net, m, k)) {
                CAPTURE(m, k);
                REQUIRE(p.size() == m + 1);  // stub + (k-1) horizontals + (m-k) diagonals
                std::vector<BigInt> diagonal_weights;
                std::size_t unit_edges = 0;
                for (std::size_t t = 0; t + 1 < p.size(); ++t) {
                    const auto e = net.find_edge(p[t], p[t + 1]);
                    REQUIRE(e.has_value());
                    const BigInt& w = net.edges()[*e].weight;
                    if (w == 1) {
                        ++unit_edges;
                    } else {
                        diagonal_weights.push_back(w);
                    }
                }
                CHECK(unit_edges == k);  // source stub plus k-1 interior horizontals
                std::sort(diagonal_weights.begin(), diagonal_weights.end());
                REQUIRE(diagonal_weights.size() == m - k);
                for (std::size_t t = 0; t < diagonal_weights.size(); ++t)
                    CHECK(diagonal_weights[t] == k + 1 + t);
            }
        }
}

TEST_CASE("path_weight rejects vertex pairs without an edge") {
    const Network net = lahnet::lah_network(2);
    const lahnet::Path bogus = {net.source(1), net.source(2)};
    CHECK_THROWS_AS(lahnet::path_weight(net, bogus), lahnet::IndexError);
}

TEST_CASE("construction rejects malformed networks") {
    const BigInt one(1);
    SECTION("directed cycle") {
        CHECK_THROWS_AS(Network({"a1", "x", "y", "b1"},
                                {{0, 1, one}, {1, 2, one}, {2, 1, one}, {2, 3, one}},
                                {0}, {3}),
                        lahnet::InvariantViolation);
    }
    SECTION("source with incoming edge") {
        CHECK_THROWS_AS(Network({"a1", "b1"}, {{0, 1, one}, {1, 0, one}}, {0}, {1}),
                        lahnet::InvariantViolation);
    }
    SECTION("sink with outgoing edge") {
        CHECK_THROWS_AS(Network({"a1", "b1", "x"}, {{0, 1, one}, {1, 2, one}}, {0}, {1}),
                        lahnet::InvariantViolation);
    }
    SECTION("duplicate source") {
        CHECK_THROWS_AS(Network({"a1", "b1", "b2"}, {{0, 1, one}, {0, 2, one}}, {0, 0}, {1, 2}),
                        lahnet::InvariantViolation);
    }
    SECTION("source and sink lists differ in length") {
        CHECK_THROWS_AS(Network({"a1", "b1", "b2"}, {{0, 1, one}, {0, 2, one}}, {0}, {1, 2}),
                        lahnet::InvariantViolation);
    }
    SECTION("zero weight") {
        CHECK_THROWS_AS(Network({"a1", "b1"}, {{0, 1, BigInt(0)}}, {0}, {1}),
                        lahnet::InvariantViolation);
    }
    SECTION("duplicate edge") {
        CHECK_THROWS_AS(Network({"a1", "b1"}, {{0, 1, one}, {0, 1, BigInt(2)}}, {0}, {1}),
                        lahnet::InvariantViolation);
    }
    SECTION("edge endpoint out of range") {
        CHECK_THROWS_AS(Network({"a1", "b1"}, {{0, 7, one}}, {0}, {1}),
                        lahnet::InvariantViolation);
    }
}

TEST_CASE("edge reweighting") {
    const Network net = lahnet::lah_network(3);
    const Network mutated = lahnet::with_edge_weight(net, "u[3,2]", "b2", BigInt(4));
    const ExactMatrix W = lahnet::weight_matrix(mutated);
    CHECK(W.at(3, 2) == 7);
    CHECK(W.at(3, 1) == 6);
    CHECK_FALSE(W == lahnet::weight_matrix(net));

    CHECK_THROWS_AS(lahnet::with_edge_weight(net, "nope", "b2", BigInt(4)), lahnet::IndexError);
    CHECK_THROWS_AS(lahnet::with_edge_weight(net, "a1", "b3", BigInt(4)), lahnet::IndexError);
    CHECK_THROWS_AS(lahnet::with_edge_weight(net, "u[3,2]", "b2", BigInt(0)),
                    lahnet::InvariantViolation);
}

TEST_CASE("source and sink accessors are 1-based and checked") {
    const Network net = lahnet::lah_network(3);
    CHECK(net.label(net.source(2)) == "a2");
    CHECK(net.label(net.sink(3)) == "b3");
    CHECK_THROWS_AS(net.source(0), lahnet::IndexError);
    CHECK_THROWS_AS(net.sink(4), lahnet::IndexError);
}

TEST_CASE("dot rendering is exact and deterministic") {
    const std::string expected =
        "digraph network {\n"
        "  rankdir=LR;\n"
        "  { rank=source; \"a1\"; }\n"
        "  { rank=sink; \"b1\"; }\n"
        "  \"a1\";\n"
        "  \"b1\";\n"
        "  \"a1\" -> \"b1\" [label=\"1\"];\n"
        "}\n";
    CHECK(lahnet::to_dot(lahnet::lah_network(1)) == expected);
    CHECK(lahnet::to_dot(lahnet::lah_network(4)) == lahnet::to_dot(lahnet::lah_network(4)));

    const std::string unit_dot = lahnet::to_dot(lahnet::unit_network(2));
    CHECK(unit_dot.find("label=\"2\"") == std::string::npos);
    CHECK(lahnet::to_dot(lahnet::lah_network(2)).find("label=\"2\"") != std::string::npos);
}
