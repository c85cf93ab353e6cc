#ifndef XGRAPH_CANONICAL_HPP
#define XGRAPH_CANONICAL_HPP

#include <string>

#include "xgraph/graph.hpp"

namespace xgraph {

// Isomorphism-class key: minimum over all vertex permutations of the edge
// list encoding, with colors renamed by first appearance so color
// permutations collapse too. Exhaustive over n! permutations; n <= 10
// (throws unsupported_error beyond that). Weights are part of the encoding.
std::string canonical_form(const ExperimentGraph& g);

// Same, but with every weight treated as 1. Used by the search to
// deduplicate colorings before weights are assigned.
std::string canonical_form_ignore_weights(const ExperimentGraph& g);

// canonical_form equality; same n <= 10 limit.
bool isomorphic(const ExperimentGraph& a, const ExperimentGraph& b);

}

#endif
