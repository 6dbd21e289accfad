#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "dgs/io.hpp"
#include "dgs/metagraph.hpp"
#include "dgs/rng.hpp"

using namespace dgs;

TEST_CASE("degree sequence text parsing") {
    std::istringstream in("# comment\n1 1\n\n  1 1\n1 1\n");
    const DegreeSequence d = parse_degree_sequence_text(in);
    CHECK(d == DegreeSequence({{1, 1}, {1, 1}, {1, 1}}));
}

TEST_CASE("degree sequence text parsing rejects malformed input") {
    const auto expect_fail = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_degree_sequence_text(in), parse_error);
    };
    expect_fail("");
    expect_fail("# only comments\n");
    expect_fail("1\n");
    expect_fail("1 2 3\n");
    expect_fail("-1 0\n0 0\n");
    expect_fail("2 0\n0 1\n"); // degree >= N
    expect_fail("a b\n");
}

TEST_CASE("degree sequence JSON parsing") {
    CHECK(parse_degree_sequence_json(nlohmann::json::parse("[[1,1],[1,1]]")) ==
          DegreeSequence({{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(parse_degree_sequence_json(nlohmann::json::parse("[]")), parse_error);
    CHECK_THROWS_AS(parse_degree_sequence_json(nlohmann::json::parse("[[1],[1,1]]")),
                    parse_error);
    CHECK_THROWS_AS(parse_degree_sequence_json(nlohmann::json::parse("[[2,0],[0,1]]")),
                    parse_error);
}

TEST_CASE("digraph text round-trips on canonical form") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));
        Digraph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (u != v && rng.bernoulli(0.3)) g.add_arc(u, v);
        std::ostringstream out;
        write_digraph_text(out, g);
        std::istringstream in(out.str());
        CHECK(parse_digraph_text(in) == g);
    }
}

TEST_CASE("digraph JSON round-trips") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));
        Digraph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (u != v && rng.bernoulli(0.3)) g.add_arc(u, v);
        CHECK(digraph_from_json(digraph_to_json(g)) == g);
    }
}

TEST_CASE("digraph parsing rejects invalid arc lists") {
    const auto expect_fail = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_digraph_text(in), parse_error);
    };
    expect_fail("");
    expect_fail("3\n1 1\n");  // self-loop
    expect_fail("3\n1 4\n");  // out of range
    expect_fail("3\n1 2\n1 2\n"); // duplicate
    expect_fail("0\n");
}
