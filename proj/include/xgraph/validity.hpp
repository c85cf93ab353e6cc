#ifndef XGRAPH_VALIDITY_HPP
#define XGRAPH_VALIDITY_HPP

#include <complex>
#include <set>
#include <utility>
#include <vector>

#include "xgraph/matching.hpp"

namespace xgraph {

// Validity decision. A graph is valid when every feasible monochromatic
// coloring has weight exactly 1 and every other feasible coloring weight
// exactly 0. mu counts the feasible monochromatic colorings of weight 1.
struct Verdict {
    bool is_valid = false;
    int mu = 0;
    // No perfect matchings, or none inducing a monochromatic coloring.
    // Such graphs are valid with mu = 0; certificate ops reject them.
    bool vacuous = false;
    std::vector<std::pair<VertexColoring, GaussianRational>> violations;
    std::set<Color> feasible_mono_colors;
    // Colors appearing on at least one half-edge; can exceed mu when some
    // color never occurs in a feasible monochromatic coloring.
    int color_class_count = 0;
    WeightTable table;
};

struct BoundComparison {
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
    std::string rendered;
};

struct DimensionReport {
    int n = 0;
    int mu = 0;
    BoundComparison bound_sqrt2;       // 2*mu^2 <= n^2, exact integers
    BoundComparison bound_conjecture;  // 2*mu < n
    bool is_counterexample_thm = false;
    bool is_counterexample_conj = false;
};

Verdict verify(const ExperimentGraph& g, std::uint64_t cap = default_matching_cap());

// mu(G). Requires a valid graph; throws precondition_error otherwise.
int dimension(const ExperimentGraph& g, std::uint64_t cap = default_matching_cap());

// Pure arithmetic on (n, mu); split out so the comparisons are testable
// without constructing a graph that attains them.
DimensionReport make_dimension_report(int n, int mu);

DimensionReport bound_report(const ExperimentGraph& g, std::uint64_t cap = default_matching_cap());

// Diagnostic: for every vertex v and every color i used anywhere in g,
// reports (v, i) when no monochromatic edge of color i touches v. On valid
// graphs whose used colors are all feasible this is empty exactly when the
// guarantee "each feasible color has a monochromatic edge at every vertex"
// holds; colors that are used but infeasible are reported too, which is the
// useful behavior when diagnosing a deleted-edge regression.
std::vector<std::pair<Vertex, Color>> check_monoedge_property(const ExperimentGraph& g);

// Floating-point mode for imported approximate data (CLI only). The graph
// structure is exact; weights live in a parallel array.
struct FloatGraph {
    ExperimentGraph structure;  // weights all set to 1
    std::vector<std::complex<double>> weights;
};

struct FloatVerdict {
    bool is_valid = false;
    int mu = 0;
    bool vacuous = false;
    std::vector<std::pair<VertexColoring, std::complex<double>>> violations;
};

FloatVerdict verify_float(const FloatGraph& fg, double eps = 1e-9,
                          std::uint64_t cap = default_matching_cap());

}

#endif
