#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xgraph/matching.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

using namespace xgraph;
using namespace xtest;

TEST_CASE("the 9-edge GHZ graph has exactly four perfect matchings") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    auto pms = enumerate_perfect_matchings(g);
    REQUIRE(pms.size() == 4);
    CHECK(pms == oracle_perfect_matchings(g));

    // lexicographic order over sorted edge-index sets
    CHECK(pms[0].edges == std::vector<std::size_t>{0, 3, 8});
    CHECK(pms[1].edges == std::vector<std::size_t>{0, 4, 7});
    CHECK(pms[2].edges == std::vector<std::size_t>{0, 5, 6});
    CHECK(pms[3].edges == std::vector<std::size_t>{1, 2, 6});

    CHECK(induced_coloring(g, pms[0]).ket() == "|111111>");
    CHECK(induced_coloring(g, pms[1]).ket() == "|111001>");
    CHECK(induced_coloring(g, pms[2]).ket() == "|111001>");
    CHECK(induced_coloring(g, pms[3]).ket() == "|000000>");

    CHECK(matching_weight(g, pms[0]).is_one());
    CHECK(matching_weight(g, pms[1]) == GaussianRational(-1));  // i * i
    CHECK(matching_weight(g, pms[2]).is_one());
    CHECK(matching_weight(g, pms[3]).is_one());
}

TEST_CASE("matching_weight rejects sets that are not perfect matchings") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    CHECK_THROWS_AS(matching_weight(g, PerfectMatching{{0, 3}}), input_error);      // misses 4,5
    CHECK_THROWS_AS(matching_weight(g, PerfectMatching{{0, 2, 8}}), input_error);   // reuses vertex 1
    CHECK_THROWS_AS(matching_weight(g, PerfectMatching{{0, 3, 99}}), input_error);  // bad index
}

TEST_CASE("weight table groups matchings by induced coloring") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    auto table = weight_table(g);
    REQUIRE(table.entries.size() == 3);
    CHECK(table.total_matchings() == 4);

    VertexColoring all0{{0, 0, 0, 0, 0, 0}};
    VertexColoring all1{{1, 1, 1, 1, 1, 1}};
    VertexColoring mixed{{1, 1, 1, 0, 0, 1}};
    REQUIRE(table.entries.count(all0) == 1);
    REQUIRE(table.entries.count(all1) == 1);
    REQUIRE(table.entries.count(mixed) == 1);
    CHECK(table.entries.at(all0).weight.is_one());
    CHECK(table.entries.at(all0).matching_count == 1);
    CHECK(table.entries.at(all1).weight.is_one());
    CHECK(table.entries.at(all1).matching_count == 1);
    CHECK(table.entries.at(mixed).weight.is_zero());  // 1 + (-1)
    CHECK(table.entries.at(mixed).matching_count == 2);
}

TEST_CASE("odd and empty vertex sets behave as the definitions demand") {
    ExperimentGraph odd(3, {mono(0, 1, 0), mono(1, 2, 0)});
    CHECK(enumerate_perfect_matchings(odd).empty());
    CHECK(weight_table(odd).entries.empty());

    ExperimentGraph empty(0, {});
    auto pms = enumerate_perfect_matchings(empty);
    REQUIRE(pms.size() == 1);  // the empty matching covers the empty vertex set
    CHECK(pms[0].edges.empty());
    CHECK(matching_weight(empty, pms[0]).is_one());

    ExperimentGraph isolated(2, {});
    CHECK(enumerate_perfect_matchings(isolated).empty());
}

TEST_CASE("enumeration cap aborts instead of flooding memory") {
    std::vector<HalfColoredEdge> edges;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v) edges.push_back(mono(u, v, 0));
    ExperimentGraph k6(6, std::move(edges));
    CHECK(enumerate_perfect_matchings(k6).size() == 15);
    CHECK_THROWS_AS(enumerate_perfect_matchings(k6, 3), resource_error);
    CHECK_THROWS_AS(weight_table(k6, 3), resource_error);
}

TEST_CASE("enumeration agrees with the subset oracle on random graphs") {
    RandomGen gen(987654321);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + 2 * (t % 3);  // 2, 4, 6
        auto g = gen.graph(n, 9, 3, true);
        auto got = enumerate_perfect_matchings(g);
        auto want = oracle_perfect_matchings(g);
        REQUIRE(got == want);
        CHECK(std::is_sorted(got.begin(), got.end()));

        auto table = weight_table(g);
        auto oracle = oracle_weight_table(g);
        REQUIRE(table.entries.size() == oracle.entries.size());
        for (const auto& [vc, entry] : table.entries) {
            REQUIRE(oracle.entries.count(vc) == 1);
            CHECK(entry.weight == oracle.entries.at(vc).weight);
            CHECK(entry.matching_count == oracle.entries.at(vc).matching_count);
        }
    }
}
