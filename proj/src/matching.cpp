#include "xgraph/matching.hpp"

#include <cstdlib>
#include <string>

namespace xgraph {

std::uint64_t default_matching_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("XGRAPH_MATCHING_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
            throw input_error("XGRAPH_MATCHING_CAP must be a positive integer");
        }
        return std::uint64_t{10'000'000};
    }();
    return cap;
}

namespace {

// Branching on the lowest uncovered vertex and trying its incident edges in
// ascending index order emits matchings in lexicographic order of their
// sorted index sets: the first selected edge always contains vertex 0 and
// is the set's minimum, and so on down the recursion.
void enumerate_rec(const ExperimentGraph& g, std::vector<bool>& covered, Vertex from,
                   std::vector<std::size_t>& picked, std::vector<PerfectMatching>& out,
                   std::uint64_t cap) {
    Vertex v = from;
    while (v < g.vertex_count() && covered[v]) ++v;
    if (v == g.vertex_count()) {
        if (out.size() >= cap)
            throw resource_error("matching cap exceeded (" + std::to_string(cap) + ")");
        out.push_back({picked});
        return;
    }
    for (std::size_t idx : g.incident(v)) {
        const auto& e = g.edge(idx);
        Vertex w = e.other(v);
        if (covered[w]) continue;
        covered[v] = covered[w] = true;
        picked.push_back(idx);
        enumerate_rec(g, covered, v + 1, picked, out, cap);
        picked.pop_back();
        covered[v] = covered[w] = false;
    }
}

}

std::vector<PerfectMatching> enumerate_perfect_matchings(const ExperimentGraph& g,
                                                         std::uint64_t cap) {
    std::vector<PerfectMatching> out;
    if (g.vertex_count() % 2 != 0) return out;
    if (g.vertex_count() == 0) {
        out.push_back({});  // the empty matching covers the empty vertex set
        return out;
    }
    std::vector<bool> covered(g.vertex_count(), false);
    std::vector<std::size_t> picked;
    picked.reserve(g.vertex_count() / 2);
    enumerate_rec(g, covered, 0, picked, out, cap);
    return out;
}

namespace {

void check_is_perfect_matching(const ExperimentGraph& g, const PerfectMatching& p) {
    std::vector<int> cover(g.vertex_count(), 0);
    for (std::size_t idx : p.edges) {
        if (idx >= g.edge_count()) throw input_error("matching references a missing edge");
        ++cover[g.edge(idx).u];
        ++cover[g.edge(idx).v];
    }
    for (int c : cover)
        if (c != 1) throw input_error("edge set is not a perfect matching");
}

}

GaussianRational matching_weight(const ExperimentGraph& g, const PerfectMatching& p) {
    check_is_perfect_matching(g, p);
    GaussianRational w(1);
    for (std::size_t idx : p.edges) w *= g.edge(idx).w;
    return w;
}

VertexColoring induced_coloring(const ExperimentGraph& g, const PerfectMatching& p) {
    check_is_perfect_matching(g, p);
    VertexColoring vc;
    vc.at.assign(g.vertex_count(), 0);
    for (std::size_t idx : p.edges) {
        const auto& e = g.edge(idx);
        vc.at[e.u] = e.cu;
        vc.at[e.v] = e.cv;
    }
    return vc;
}

WeightTable weight_table(const ExperimentGraph& g, std::uint64_t cap) {
    WeightTable t;
    for (const auto& pm : enumerate_perfect_matchings(g, cap)) {
        VertexColoring vc = induced_coloring(g, pm);
        auto& entry = t.entries[vc];
        entry.weight += matching_weight(g, pm);
        entry.matching_count += 1;
    }
    return t;
}

}
