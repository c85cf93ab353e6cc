#ifndef XGRAPH_SEARCH_HPP
#define XGRAPH_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xgraph/validity.hpp"

namespace xgraph {

// Search space: graphs on n vertices (even, n <= 8) with colors from
// [0, max_colors), weights from the alphabet, optionally restricted to the
// edge set of a base skeleton. The search covers graphs in which every used
// color is feasible; any valid graph reduces to one of those with the same
// mu by discarding infeasible-color edges, so the best dimension over the
// class equals the best overall.
struct SearchSpace {
    int n = 0;
    int max_colors = 1;
    std::vector<GaussianRational> weight_alphabet;  // default {1, -1, i, -i}
    bool mono_only = true;
    bool up_to_iso = true;
    std::optional<ExperimentGraph> base_graph;

    SearchSpace();
};

struct SearchOptions {
    std::uint64_t budget = 100'000'000;
    // With a target, only graphs using and realizing all max_colors colors
    // (mu == target) are sought, enabling much stronger pruning.
    std::optional<int> target_mu;
    std::size_t max_witnesses = 100;
    int workers = 1;
    std::string checkpoint_path;  // written every checkpoint_interval nodes
    std::string resume_path;
    std::uint64_t checkpoint_interval = 1'000'000;
};

struct SearchResult {
    int best_mu = 0;
    std::vector<ExperimentGraph> witnesses;  // each re-verified, mu == best_mu
    bool witnesses_truncated = false;
    std::uint64_t explored = 0;  // completed colorings examined
    std::uint64_t pruned = 0;    // branches cut before completion
    std::uint64_t nodes = 0;
    bool complete = false;  // false when the budget ran out
};

SearchResult search_max_dimension(const SearchSpace& space, const SearchOptions& opts = {});

// One polynomial equation per feasible coloring of the skeleton, treating
// each edge weight as an indeterminate x_<u>_<v>: the sum over inducing
// matchings of the edge-variable products equals 1 for monochromatic
// colorings and 0 otherwise. Equations are ordered by coloring, terms by
// the matching enumeration order. vertex_labels, when given, renames the
// vertices in the variable names.
std::string export_polynomial_system(const ExperimentGraph& g,
                                     const std::vector<int>& vertex_labels = {},
                                     std::uint64_t cap = default_matching_cap());

}

#endif
