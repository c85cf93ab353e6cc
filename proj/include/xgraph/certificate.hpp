#ifndef XGRAPH_CERTIFICATE_HPP
#define XGRAPH_CERTIFICATE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xgraph/validity.hpp"

namespace xgraph {

// For a fixed color i on a valid graph: R holds the vertices with color
// degree exactly 1, U those with degree >= 2. isolated_matching is the set
// of i-colored isolated edges; it perfectly matches G[R] on sparsification
// fixpoints (and on edge-minimum graphs), but not on every valid graph, so
// that property is recorded as a flag instead of asserted.
struct SparsePartition {
    Color color = 0;
    std::set<Vertex> R;
    std::set<Vertex> U;
    std::vector<HalfColoredEdge> isolated_matching;
    bool perfect_on_R = false;
};

// The sparse subgraph chi built from a chosen isolated base edge {u,v}:
// for each feasible color with no half of that color from u (resp. v) into
// U, one monochromatic edge of that color at u (resp. v) is added. All chi
// edges land in R; chi_u and chi_v share exactly the base edge.
struct RepresentativeSparseGraph {
    HalfColoredEdge base;
    std::vector<HalfColoredEdge> chi_u;
    std::vector<HalfColoredEdge> chi_v;
    std::vector<HalfColoredEdge> chi;
};

struct CertificateCheck {
    std::string name;
    int color = -1;  // -1 for graph-global checks
    std::optional<std::pair<Vertex, Vertex>> base;
    std::string inequality;  // rendered with the concrete integers
    bool applicable = true;
    bool holds = false;
    // Empty when the claim needs nothing beyond validity; otherwise the
    // assumptions under which it is proven (e.g. "edge-minimum", "n>4").
    std::string hypothesis;
    std::string note;
};

struct CertificateReport {
    int n = 0;
    int mu = 0;
    std::vector<CertificateCheck> checks;
    bool all_hold = false;  // over the applicable checks

    std::vector<const CertificateCheck*> failures() const {
        std::vector<const CertificateCheck*> f;
        for (const auto& c : checks)
            if (c.applicable && !c.holds) f.push_back(&c);
        return f;
    }
};

// Requires verify(g).is_valid and a feasible color i; throws
// precondition_error otherwise, and when some vertex has no half of color i
// at all ("monoedge property violated"). Pass the Verdict if already
// computed to avoid re-verification.
SparsePartition partition_RU(const ExperimentGraph& g, Color i, const Verdict* known = nullptr,
                             std::uint64_t cap = default_matching_cap());

// Lexicographically smallest isolated edge; the deterministic stand-in for
// the "pick an arbitrary isolated edge" step.
HalfColoredEdge select_base_edge(const SparsePartition& p);

RepresentativeSparseGraph build_chi(const ExperimentGraph& g, const SparsePartition& p,
                                    const HalfColoredEdge& base, const Verdict* known = nullptr,
                                    std::uint64_t cap = default_matching_cap());

// Evaluates every structural inequality, for every feasible color and every
// base-edge choice, with exact integer arithmetic. Requires a valid graph
// with mu >= 1 (vacuous graphs are rejected with precondition_error).
// Checks whose derivation assumes more than validity carry a hypothesis
// label and are gated not-applicable when their structural preconditions
// fail (fewer than two isolated edges, n <= 4, or an isolated matching that
// does not perfectly match R).
CertificateReport certificate_report(const ExperimentGraph& g,
                                     std::uint64_t cap = default_matching_cap());

}

#endif
