#ifndef XGRAPH_MATCHING_HPP
#define XGRAPH_MATCHING_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "xgraph/graph.hpp"

namespace xgraph {

// Indices into the parent graph's edge list, kept sorted ascending.
struct PerfectMatching {
    std::vector<std::size_t> edges;

    bool operator==(const PerfectMatching& o) const { return edges == o.edges; }
    bool operator<(const PerfectMatching& o) const { return edges < o.edges; }
};

struct WeightTableEntry {
    GaussianRational weight;
    std::size_t matching_count = 0;
};

// w(vc) for every feasible vertex coloring. Infeasible colorings are simply
// absent (their weight is zero by definition). std::map keeps entries in
// lexicographic coloring order, which all serializations rely on.
struct WeightTable {
    std::map<VertexColoring, WeightTableEntry> entries;

    std::size_t total_matchings() const {
        std::size_t t = 0;
        for (const auto& [vc, e] : entries) t += e.matching_count;
        return t;
    }
};

// Enumeration cap: default 10^7 materialized matchings, overridable via the
// XGRAPH_MATCHING_CAP environment variable (read once per process).
std::uint64_t default_matching_cap();

// All perfect matchings, in lexicographic order of their sorted edge-index
// sets. The branch order (lowest uncovered vertex, edges by ascending index)
// produces exactly that order, so no sort is needed afterwards.
// Throws resource_error once more than `cap` matchings have been collected.
std::vector<PerfectMatching> enumerate_perfect_matchings(const ExperimentGraph& g,
                                                         std::uint64_t cap = default_matching_cap());

// Product of edge weights. Validates that p really is a perfect matching.
GaussianRational matching_weight(const ExperimentGraph& g, const PerfectMatching& p);

// Each vertex takes the color of its matched half-edge.
VertexColoring induced_coloring(const ExperimentGraph& g, const PerfectMatching& p);

WeightTable weight_table(const ExperimentGraph& g, std::uint64_t cap = default_matching_cap());

}

#endif
