#ifndef XGRAPH_GRAPH_HPP
#define XGRAPH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xgraph/errors.hpp"
#include "xgraph/rational.hpp"

namespace xgraph {

using Vertex = int;
using Color = int;

// An edge carrying one color per endpoint (so it may be bi-chromatic) and a
// nonzero complex weight. Stored with u < v; the half-colors travel with
// their endpoints when the pair is flipped into canonical order.
struct HalfColoredEdge {
    Vertex u = 0;
    Vertex v = 0;
    Color cu = 0;  // color of the half incident to u
    Color cv = 0;  // color of the half incident to v
    GaussianRational w = GaussianRational(1);

    HalfColoredEdge() = default;
    HalfColoredEdge(Vertex a, Vertex b, Color ca, Color cb, GaussianRational weight)
        : u(a), v(b), cu(ca), cv(cb), w(std::move(weight)) {
        if (u > v) {
            std::swap(u, v);
            std::swap(cu, cv);
        }
    }

    bool monochromatic() const { return cu == cv; }

    // Color of the half at vertex x; x must be an endpoint.
    Color color_at(Vertex x) const {
        if (x == u) return cu;
        if (x == v) return cv;
        throw invariant_violation("color_at: vertex is not an endpoint");
    }

    Vertex other(Vertex x) const {
        if (x == u) return v;
        if (x == v) return u;
        throw invariant_violation("other: vertex is not an endpoint");
    }

    bool same_pair(const HalfColoredEdge& o) const { return u == o.u && v == o.v; }
};

// Assignment of one color to every vertex.
struct VertexColoring {
    std::vector<Color> at;  // indexed by vertex

    bool is_monochromatic() const {  // vacuously true when empty
        for (Color c : at)
            if (c != at[0]) return false;
        return true;
    }

    // Ket-style digit string "|d0 d1 ... d(n-1)>" without spaces.
    std::string ket() const {
        std::string s = "|";
        for (Color c : at) s += std::to_string(c);
        return s + ">";
    }

    bool operator==(const VertexColoring& o) const { return at == o.at; }
    bool operator<(const VertexColoring& o) const { return at < o.at; }
};

// Simple undirected graph on vertices 0..n-1 with half-colored weighted
// edges. The constructor enforces structural sanity (no loops, no parallel
// edges, colors and weights well formed) and sorts edges by (u, v). It does
// NOT renumber colors; loading from JSON does that once.
class ExperimentGraph {
public:
    ExperimentGraph() = default;
    ExperimentGraph(int n, std::vector<HalfColoredEdge> edges);

    int vertex_count() const { return n_; }
    const std::vector<HalfColoredEdge>& edges() const { return edges_; }
    const HalfColoredEdge& edge(std::size_t idx) const { return edges_.at(idx); }
    std::size_t edge_count() const { return edges_.size(); }

    // d(v, c): number of half-edges at v colored c.
    int color_degree(Vertex v, Color c) const;

    // Plain degree.
    int degree(Vertex v) const;

    // Sorted list of colors appearing on at least one half-edge.
    std::vector<Color> used_colors() const;

    // Index of the edge {u, v} if present.
    std::optional<std::size_t> find_edge(Vertex u, Vertex v) const;

    // Copy with the given edge indices removed (indices into edges()).
    ExperimentGraph without_edges(const std::set<std::size_t>& drop) const;

    // Edge indices incident to v.
    const std::vector<std::size_t>& incident(Vertex v) const { return incident_[v]; }

    bool operator==(const ExperimentGraph& o) const {
        if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& a = edges_[i];
            const auto& b = o.edges_[i];
            if (a.u != b.u || a.v != b.v || a.cu != b.cu || a.cv != b.cv || a.w != b.w)
                return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<HalfColoredEdge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

// Subgraph induced by a vertex subset, with vertices renumbered to
// 0..|S|-1. vertex_map[i] is the original id of new vertex i.
struct InducedSubgraph {
    ExperimentGraph graph;
    std::vector<Vertex> vertex_map;
};

InducedSubgraph induced_subgraph(const ExperimentGraph& g, const std::set<Vertex>& s);

}

#endif
