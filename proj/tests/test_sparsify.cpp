#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xgraph/canonical.hpp"
#include "xgraph/sparsify.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

using namespace xgraph;
using namespace xtest;

TEST_CASE("the 9-edge GHZ graph sparsifies to the alternating 6-cycle") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    auto res = prune_to_fixpoint(g, default_matching_cap(), true);

    CHECK(res.graph.edge_count() == 6);
    CHECK(res.trace.removed_count() == 3);

    auto c6 = load_fixture("c6_alternating.json").graph;
    CHECK(res.graph == c6);  // identical on the nose, not just isomorphic
    CHECK(isomorphic(res.graph, c6));

    auto v = verify(res.graph);
    CHECK(v.is_valid);
    CHECK(v.mu == 2);

    // only the isolated-edge rule fires, twice, removing first the two
    // color-1 competitors at vertex 2, then the color-0 competitor at 3
    REQUIRE(res.trace.steps.size() == 2);
    CHECK(res.trace.steps[0].rule == "color-isolated");
    CHECK(res.trace.steps[1].rule == "color-isolated");
    REQUIRE(res.trace.steps[0].removed.size() == 2);
    CHECK(res.trace.steps[0].removed[0].same_pair(bi(2, 4, 1, 0)));
    CHECK(res.trace.steps[0].removed[1].same_pair(mono(2, 5, 1)));
    REQUIRE(res.trace.steps[1].removed.size() == 1);
    CHECK(res.trace.steps[1].removed[0].same_pair(bi(3, 5, 0, 1)));

    CHECK(replay_trace(g, res.trace) == res.graph);

    // the intermediate graph after the first batch is itself valid
    auto mid = replay_trace(g, PruneTrace{{res.trace.steps[0]}});
    CHECK(mid.edge_count() == 7);
    auto vm = verify(mid);
    CHECK(vm.is_valid);
    CHECK(vm.mu == 2);

    // a fixpoint prunes to itself
    auto again = prune_to_fixpoint(res.graph);
    CHECK(again.graph == res.graph);
    CHECK(again.trace.steps.empty());
}

TEST_CASE("matching-covered reduction strips edges outside every matching") {
    // pendant path hanging off a perfect-matchable square
    ExperimentGraph g(6, {mono(0, 1, 0), mono(1, 2, 0), mono(2, 3, 0), mono(0, 3, 0),
                          mono(2, 4, 0), mono(4, 5, 0)});
    auto before = weight_table(g);
    auto res = matching_covered_reduction(g);
    // (4,5) is forced, so (2,4) can never be matched; the square survives
    CHECK(res.graph.edge_count() == 5);
    CHECK_FALSE(res.graph.find_edge(2, 4).has_value());
    REQUIRE(res.trace.steps.size() == 1);
    CHECK(res.trace.steps[0].rule == "matching-covered");

    auto after = weight_table(res.graph);
    REQUIRE(before.entries.size() == after.entries.size());
    for (const auto& [vc, e] : before.entries) {
        REQUIRE(after.entries.count(vc) == 1);
        CHECK(after.entries.at(vc).weight == e.weight);
        CHECK(after.entries.at(vc).matching_count == e.matching_count);
    }
}

TEST_CASE("matching-covered reduction preserves the weight table bit for bit") {
    RandomGen gen(777);
    for (int t = 0; t < 60; ++t) {
        auto g = gen.graph(6, 10, 2, true);
        auto before = weight_table(g);
        auto res = matching_covered_reduction(g);
        auto after = weight_table(res.graph);
        REQUIRE(before.entries.size() == after.entries.size());
        for (const auto& [vc, e] : before.entries) {
            REQUIRE(after.entries.count(vc) == 1);
            CHECK(after.entries.at(vc).weight == e.weight);
            CHECK(after.entries.at(vc).matching_count == e.matching_count);
        }
    }
}

TEST_CASE("infeasible-color prune removes colors with no monochromatic matching") {
    // a junk color-2 edge cannot appear in any monochromatic-2 matching
    auto lg = load_fixture("ghz62_fig1.json");
    auto edges = lg.graph.edges();
    edges.push_back(mono(1, 3, 2));
    ExperimentGraph g(6, std::move(edges));

    auto res = infeasible_color_prune(g);
    CHECK(res.graph == lg.graph);
    REQUIRE(res.trace.steps.size() == 1);
    CHECK(res.trace.steps[0].rule == "infeasible-color");
    REQUIRE(res.trace.steps[0].removed.size() == 1);
    CHECK(res.trace.steps[0].removed[0].same_pair(mono(1, 3, 2)));

    // colorings that avoid color 2 keep their exact weights
    auto before = weight_table(g);
    auto after = weight_table(res.graph);
    for (const auto& [vc, e] : after.entries) {
        REQUIRE(before.entries.count(vc) == 1);
        CHECK(before.entries.at(vc).weight == e.weight);
    }
}

TEST_CASE("isolated-edge prune requires validity") {
    auto broken = load_fixture("ghz62_broken.json").graph;
    CHECK_THROWS_AS(color_isolated_prune(broken), precondition_error);
    CHECK_THROWS_AS(prune_to_fixpoint(broken), precondition_error);
}

TEST_CASE("isolated edges are the mono edges with color degree 1 at both ends") {
    auto c6 = load_fixture("c6_alternating.json").graph;
    CHECK(find_color_isolated_edges(c6).size() == 6);  // every edge, in a 2-regular 2-coloring

    auto fig1 = load_fixture("ghz62_fig1.json").graph;
    auto iso = find_color_isolated_edges(fig1);
    REQUIRE(iso.size() == 3);
    CHECK(iso[0].same_pair(mono(0, 1, 1)));
    CHECK(iso[1].same_pair(mono(0, 5, 0)));
    CHECK(iso[2].same_pair(mono(1, 2, 0)));
}

TEST_CASE("prune rules preserve their contracts on random graphs") {
    RandomGen gen(31337);
    int valid_seen = 0;
    for (int t = 0; t < 150; ++t) {
        int n = t % 2 == 0 ? 4 : 6;
        auto g = gen.graph(n, 10, 2, true);

        // matching-covered: table identical
        {
            auto before = weight_table(g);
            auto res = matching_covered_reduction(g);
            auto after = weight_table(res.graph);
            REQUIRE(before.entries.size() == after.entries.size());
            for (const auto& [vc, e] : before.entries) {
                REQUIRE(after.entries.count(vc) == 1);
                CHECK(after.entries.at(vc).weight == e.weight);
                CHECK(after.entries.at(vc).matching_count == e.matching_count);
            }
        }

        // infeasible-color: colorings avoiding the pruned colors keep weights
        {
            auto before = weight_table(g);
            auto res = infeasible_color_prune(g);
            auto after = weight_table(res.graph);
            for (const auto& [vc, e] : after.entries) {
                REQUIRE(before.entries.count(vc) == 1);
                CHECK(before.entries.at(vc).weight == e.weight);
            }
        }

        // color-isolated: validity and mu preserved (valid graphs only)
        auto v = verify(g);
        if (v.is_valid) {
            ++valid_seen;
            auto res = color_isolated_prune(g, default_matching_cap(), true);
            auto v2 = verify(res.graph);
            CHECK(v2.is_valid);
            CHECK(v2.mu == v.mu);
        }
    }
    CHECK(valid_seen > 0);

    // manufactured non-vacuous valid graphs: relabelings of the fixtures
    std::vector<ExperimentGraph> fixtures = {load_fixture("ghz62_fig1.json").graph,
                                             load_fixture("c6_alternating.json").graph};
    std::vector<std::vector<Vertex>> perms = {
        {0, 1, 2, 3, 4, 5}, {5, 4, 3, 2, 1, 0}, {2, 0, 4, 1, 5, 3}, {1, 3, 5, 0, 2, 4}};
    for (const auto& base : fixtures) {
        for (const auto& p : perms) {
            auto g = permute_graph(base, p);
            auto v = verify(g);
            REQUIRE(v.is_valid);
            auto res = prune_to_fixpoint(g, default_matching_cap(), true);
            auto v2 = verify(res.graph);
            CHECK(v2.is_valid);
            CHECK(v2.mu == v.mu);
            CHECK(replay_trace(g, res.trace) == res.graph);
        }
    }
}

TEST_CASE("replaying a tampered trace is rejected") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    auto res = prune_to_fixpoint(g);

    auto missing = res.trace;
    missing.steps[0].removed[0] = mono(0, 3, 1);  // no such edge
    CHECK_THROWS_AS(replay_trace(g, missing), invariant_violation);

    auto differs = res.trace;
    differs.steps[0].removed[0].w = GaussianRational(7);
    CHECK_THROWS_AS(replay_trace(g, differs), invariant_violation);
}
