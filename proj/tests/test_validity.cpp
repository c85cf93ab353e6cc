#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xgraph/validity.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

using namespace xgraph;
using namespace xtest;

TEST_CASE("the 9-edge GHZ graph is valid with mu = 2") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    auto v = verify(g);
    CHECK(v.is_valid);
    CHECK(v.mu == 2);
    CHECK_FALSE(v.vacuous);
    CHECK(v.violations.empty());
    CHECK(v.feasible_mono_colors == std::set<Color>{0, 1});
    CHECK(v.color_class_count == 2);
    CHECK(v.table.entries.size() == 3);
    CHECK(dimension(g) == 2);
}

TEST_CASE("breaking the destructive interference is caught with the exact residue") {
    auto g = load_fixture("ghz62_broken.json").graph;
    auto v = verify(g);
    CHECK_FALSE(v.is_valid);
    CHECK(v.mu == 0);  // dimension is meaningless for invalid graphs
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].first.ket() == "|111001>");
    // the surviving i-weighted matching no longer cancels: i + 1
    CHECK(v.violations[0].second == GaussianRational(Rational(1), Rational(1)));

    CHECK_THROWS_AS(dimension(g), precondition_error);
    CHECK_THROWS_WITH_AS(dimension(g),
                         doctest::Contains("dimension is defined only for valid graphs"),
                         precondition_error);
}

TEST_CASE("small complete graphs hit the known dimensions") {
    auto k4 = load_fixture("k4_ghz43.json").graph;
    auto v4 = verify(k4);
    CHECK(v4.is_valid);
    CHECK(v4.mu == 3);
    CHECK(v4.feasible_mono_colors == std::set<Color>{0, 1, 2});

    auto c6 = load_fixture("c6_alternating.json").graph;
    auto v6 = verify(c6);
    CHECK(v6.is_valid);
    CHECK(v6.mu == 2);
    CHECK(v6.table.total_matchings() == 2);
}

TEST_CASE("degenerate graphs are valid but vacuous") {
    auto empty = verify(ExperimentGraph(0, {}));
    CHECK(empty.is_valid);
    CHECK(empty.vacuous);
    CHECK(empty.mu == 0);

    auto isolated = verify(ExperimentGraph(2, {}));
    CHECK(isolated.is_valid);
    CHECK(isolated.vacuous);

    auto v1 = verify(ExperimentGraph(2, {mono(0, 1, 0)}));
    CHECK(v1.is_valid);
    CHECK_FALSE(v1.vacuous);
    CHECK(v1.mu == 1);

    // the sole matching has weight i, so the monochromatic coloring fails
    auto bad = verify(ExperimentGraph(2, {mono(0, 1, 0, GaussianRational::i())}));
    CHECK_FALSE(bad.is_valid);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].second == GaussianRational::i());

    // a single bi-chromatic edge weighs 1 on a non-monochromatic coloring
    auto bi_only = verify(ExperimentGraph(2, {bi(0, 1, 0, 1)}));
    CHECK_FALSE(bi_only.is_valid);
}

TEST_CASE("dimension bound arithmetic renders exact integer comparisons") {
    auto ok = make_dimension_report(6, 2);
    CHECK(ok.bound_sqrt2.holds);
    CHECK(ok.bound_sqrt2.rendered == "2*mu^2 = 8 <= n^2 = 36");
    CHECK(ok.bound_conjecture.holds);
    CHECK(ok.bound_conjecture.rendered == "2*mu = 4 < n = 6");
    CHECK_FALSE(ok.is_counterexample_thm);
    CHECK_FALSE(ok.is_counterexample_conj);

    // n = 4 may exceed both bounds without contradicting anything
    auto k4 = make_dimension_report(4, 3);
    CHECK_FALSE(k4.bound_sqrt2.holds);
    CHECK(k4.bound_sqrt2.rendered == "2*mu^2 = 18 > n^2 = 16");
    CHECK_FALSE(k4.bound_conjecture.holds);
    CHECK(k4.bound_conjecture.rendered == "2*mu = 6 >= n = 4");
    CHECK_FALSE(k4.is_counterexample_thm);
    CHECK_FALSE(k4.is_counterexample_conj);

    auto wild = make_dimension_report(6, 5);
    CHECK(wild.is_counterexample_thm);   // 50 > 36 with n > 4
    CHECK(wild.is_counterexample_conj);  // 10 >= 6 with n > 4

    // mu = n/2 satisfies the theorem but already refutes the conjecture
    auto tight = make_dimension_report(6, 3);
    CHECK(tight.bound_sqrt2.holds);
    CHECK_FALSE(tight.bound_conjecture.holds);
    CHECK_FALSE(tight.is_counterexample_thm);
    CHECK(tight.is_counterexample_conj);

    auto g = load_fixture("ghz62_fig1.json").graph;
    auto r = bound_report(g);
    CHECK(r.n == 6);
    CHECK(r.mu == 2);
    CHECK(r.bound_sqrt2.holds);
}

TEST_CASE("monochromatic-edge diagnostic pinpoints the missing vertex/color pairs") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    CHECK(check_monoedge_property(g).empty());

    // dropping edge (4,5) of color 1 starves vertex 4 of monochromatic color-1 edges
    auto idx = g.find_edge(4, 5);
    REQUIRE(idx.has_value());
    auto h = g.without_edges({*idx});
    auto missing = check_monoedge_property(h);
    REQUIRE(missing.size() == 1);
    CHECK(missing[0] == std::pair<Vertex, Color>(4, 1));
}

TEST_CASE("float mode tolerates noise below eps and rejects noise above it") {
    auto g = load_fixture("ghz62_fig1.json").graph;
    FloatGraph fg;
    std::vector<HalfColoredEdge> skel;
    for (const auto& e : g.edges()) {
        skel.push_back(HalfColoredEdge(e.u, e.v, e.cu, e.cv, GaussianRational(1)));
        fg.weights.push_back({static_cast<double>(numerator(e.w.re)),
                              static_cast<double>(numerator(e.w.im))});
    }
    fg.structure = ExperimentGraph(g.vertex_count(), std::move(skel));

    auto exact = verify_float(fg);
    CHECK(exact.is_valid);
    CHECK(exact.mu == 2);

    fg.weights[0] += std::complex<double>(1e-12, -1e-12);
    auto nudged = verify_float(fg);
    CHECK(nudged.is_valid);
    CHECK(nudged.mu == 2);

    fg.weights[0] += std::complex<double>(1e-3, 0);
    auto off = verify_float(fg, 1e-9);
    CHECK_FALSE(off.is_valid);
    CHECK_FALSE(off.violations.empty());

    // a loose eps accepts the same data again
    auto loose = verify_float(fg, 1e-2);
    CHECK(loose.is_valid);
}

TEST_CASE("verify agrees with the brute-force oracle on random graphs") {
    RandomGen gen(424242);
    int valids = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 2 + 2 * (t % 3);
        auto g = gen.graph(n, 10, 2 + t % 2, true);
        auto v = verify(g);
        auto o = oracle_verify(g);
        CHECK(v.is_valid == o.is_valid);
        if (v.is_valid) {
            CHECK(v.mu == o.mu);
            ++valids;
        } else {
            CHECK(v.mu == 0);
            CHECK_FALSE(v.violations.empty());
        }
    }
    CHECK(valids > 0);  // mostly vacuous ones, but the branch is exercised
}
