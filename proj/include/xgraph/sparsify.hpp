#ifndef XGRAPH_SPARSIFY_HPP
#define XGRAPH_SPARSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "xgraph/validity.hpp"

namespace xgraph {

struct PruneStep {
    std::string rule;
    std::vector<HalfColoredEdge> removed;
    std::string justification;
};

// Audit trail: replaying the steps from the input graph reproduces the
// output graph exactly.
struct PruneTrace {
    std::vector<PruneStep> steps;

    std::size_t removed_count() const {
        std::size_t t = 0;
        for (const auto& s : steps) t += s.removed.size();
        return t;
    }
};

struct PruneResult {
    ExperimentGraph graph;
    PruneTrace trace;
};

// Removes exactly the edges contained in no perfect matching. The weight
// table is unchanged (removed edges contribute to no matching).
PruneResult matching_covered_reduction(const ExperimentGraph& g,
                                       std::uint64_t cap = default_matching_cap());

// For each color whose monochromatic coloring is infeasible, removes every
// edge with a half of that color. Weights of colorings avoiding the pruned
// colors are unchanged.
PruneResult infeasible_color_prune(const ExperimentGraph& g,
                                   std::uint64_t cap = default_matching_cap());

// Monochromatic edges whose color degree is 1 at both endpoints, in
// canonical edge order.
std::vector<HalfColoredEdge> find_color_isolated_edges(const ExperimentGraph& g);

// Repeatedly, for a monochromatic edge e={u,v} with color degree 1 at one
// endpoint and >= 2 at the other, removes the competing same-colored edges
// at the other endpoint. Validity and mu are preserved; with paranoid on
// (default for n <= 10) that claim is re-checked after every removal batch
// and an invariant_violation is thrown if it ever fails.
// Requires a valid input graph (precondition_error otherwise).
PruneResult color_isolated_prune(const ExperimentGraph& g,
                                 std::uint64_t cap = default_matching_cap(),
                                 std::optional<bool> paranoid = std::nullopt);

// Round-robin fixpoint of the three rules, in the order: infeasible-color,
// matching-covered, color-isolated. Output is valid with the same mu.
PruneResult prune_to_fixpoint(const ExperimentGraph& g,
                              std::uint64_t cap = default_matching_cap(),
                              std::optional<bool> paranoid = std::nullopt);

// Applies a recorded trace to a graph; used to audit traces.
ExperimentGraph replay_trace(const ExperimentGraph& g, const PruneTrace& t);

}

#endif
