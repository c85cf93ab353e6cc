#ifndef XGRAPH_TESTS_ORACLE_HPP
#define XGRAPH_TESTS_ORACLE_HPP

// Independent brute-force reference implementations. Deliberately written in
// the dumbest possible style, sharing no logic with the library: the library
// is tested against these, never the other way around.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "xgraph/matching.hpp"
#include "xgraph/validity.hpp"

namespace xtest {

using namespace xgraph;

// Every subset of the edge set, kept when it covers each vertex exactly once.
// Only sane for <= 20 edges.
inline std::vector<PerfectMatching> oracle_perfect_matchings(const ExperimentGraph& g) {
    std::vector<PerfectMatching> out;
    std::size_t m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> cover(g.vertex_count(), 0);
        PerfectMatching pm;
        for (std::size_t e = 0; e < m; ++e) {
            if (!(mask & (1u << e))) continue;
            ++cover[g.edge(e).u];
            ++cover[g.edge(e).v];
            pm.edges.push_back(e);
        }
        bool ok = true;
        for (int c : cover)
            if (c != 1) ok = false;
        if (ok) out.push_back(std::move(pm));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline WeightTable oracle_weight_table(const ExperimentGraph& g) {
    WeightTable t;
    for (const auto& pm : oracle_perfect_matchings(g)) {
        VertexColoring vc;
        vc.at.assign(g.vertex_count(), 0);
        GaussianRational w(1);
        for (std::size_t e : pm.edges) {
            const auto& he = g.edge(e);
            vc.at[he.u] = he.cu;
            vc.at[he.v] = he.cv;
            w *= he.w;
        }
        auto& entry = t.entries[vc];
        if (entry.matching_count == 0) entry.weight = GaussianRational(0);
        entry.weight += w;
        entry.matching_count += 1;
    }
    return t;
}

struct OracleVerdict {
    bool is_valid = true;
    int mu = 0;
};

inline OracleVerdict oracle_verify(const ExperimentGraph& g) {
    OracleVerdict v;
    for (const auto& [vc, entry] : oracle_weight_table(g).entries) {
        bool mono = true;
        for (Color c : vc.at)
            if (c != vc.at[0]) mono = false;
        if (vc.at.empty()) mono = true;
        if (mono && entry.weight.is_one())
            ++v.mu;
        else if (!(entry.weight.is_zero() && !mono))
            v.is_valid = false;
    }
    return v;
}

// Isomorphism by sheer enumeration: all vertex permutations crossed with all
// color permutations, weights compared exactly.
inline bool oracle_isomorphic(const ExperimentGraph& a, const ExperimentGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto colors_of = [](const ExperimentGraph& g) { return g.used_colors(); };
    std::vector<Color> ca = colors_of(a), cb = colors_of(b);
    if (ca.size() != cb.size()) return false;

    auto signature = [](const ExperimentGraph& g) {
        std::vector<std::string> sig;
        for (const auto& e : g.edges())
            sig.push_back(std::to_string(e.u) + "," + std::to_string(e.v) + "," +
                          std::to_string(e.cu) + "," + std::to_string(e.cv) + ";" + e.w.key());
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    auto sig_b = signature(b);

    std::vector<Vertex> vperm(a.vertex_count());
    for (std::size_t i = 0; i < vperm.size(); ++i) vperm[i] = static_cast<Vertex>(i);
    do {
        std::vector<int> cperm_idx(ca.size());
        for (std::size_t i = 0; i < cperm_idx.size(); ++i) cperm_idx[i] = static_cast<int>(i);
        do {
            std::map<Color, Color> cmap;
            for (std::size_t i = 0; i < ca.size(); ++i) cmap[ca[i]] = cb[cperm_idx[i]];
            std::vector<HalfColoredEdge> edges;
            for (const auto& e : a.edges())
                edges.emplace_back(vperm[e.u], vperm[e.v], cmap[e.cu], cmap[e.cv], e.w);
            ExperimentGraph mapped(a.vertex_count(), std::move(edges));
            if (signature(mapped) == sig_b) return true;
        } while (std::next_permutation(cperm_idx.begin(), cperm_idx.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return false;
}

// Deterministic generator. Uses modulo reduction on raw mt19937 draws, not
// std::uniform_int_distribution, so the stream is identical on every
// platform and the suites stay reproducible.
struct RandomGen {
    std::mt19937 rng;

    explicit RandomGen(std::uint32_t seed) : rng(seed) {}

    std::uint32_t below(std::uint32_t k) { return rng() % k; }

    GaussianRational unit_weight() {
        switch (below(4)) {
            case 0: return GaussianRational(1);
            case 1: return GaussianRational(-1);
            case 2: return GaussianRational::i();
            default: return -GaussianRational::i();
        }
    }

    ExperimentGraph graph(int n, int max_edges, int colors, bool allow_bi) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::size_t i = pairs.size(); i > 1; --i)
            std::swap(pairs[i - 1], pairs[below(static_cast<std::uint32_t>(i))]);
        std::size_t m = std::min<std::size_t>(pairs.size(), below(max_edges + 1));
        std::vector<HalfColoredEdge> edges;
        for (std::size_t i = 0; i < m; ++i) {
            Color cu = static_cast<Color>(below(colors));
            Color cv = allow_bi && below(4) == 0 ? static_cast<Color>(below(colors)) : cu;
            edges.emplace_back(pairs[i].first, pairs[i].second, cu, cv, unit_weight());
        }
        return ExperimentGraph(n, std::move(edges));
    }
};

}

#endif
