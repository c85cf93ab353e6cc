#include "xgraph/graph.hpp"

#include <algorithm>
#include <map>

namespace xgraph {

ExperimentGraph::ExperimentGraph(int n, std::vector<HalfColoredEdge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw input_error("vertex count must be nonnegative");
    for (auto& e : edges_) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            std::swap(e.cu, e.cv);
        }
        if (e.u < 0 || e.v >= n_)
            throw input_error("edge endpoint out of range");
        if (e.u == e.v) throw input_error("self-loops are not allowed");
        if (e.cu < 0 || e.cv < 0) throw input_error("colors must be nonnegative");
        if (e.w.is_zero()) throw input_error("edge weights must be nonzero");
    }
    std::sort(edges_.begin(), edges_.end(), [](const HalfColoredEdge& a, const HalfColoredEdge& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].same_pair(edges_[i - 1]))
            throw input_error("parallel edges are not allowed");
    incident_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incident_[edges_[i].u].push_back(i);
        incident_[edges_[i].v].push_back(i);
    }
}

int ExperimentGraph::color_degree(Vertex v, Color c) const {
    int d = 0;
    for (std::size_t i : incident_[v])
        if (edges_[i].color_at(v) == c) ++d;
    return d;
}

int ExperimentGraph::degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

std::vector<Color> ExperimentGraph::used_colors() const {
    std::set<Color> s;
    for (const auto& e : edges_) {
        s.insert(e.cu);
        s.insert(e.cv);
    }
    return {s.begin(), s.end()};
}

std::optional<std::size_t> ExperimentGraph::find_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v) return std::nullopt;
    for (std::size_t i : incident_[u])
        if (edges_[i].u == u && edges_[i].v == v) return i;
    return std::nullopt;
}

ExperimentGraph ExperimentGraph::without_edges(const std::set<std::size_t>& drop) const {
    std::vector<HalfColoredEdge> keep;
    keep.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (!drop.count(i)) keep.push_back(edges_[i]);
    return ExperimentGraph(n_, std::move(keep));
}

InducedSubgraph induced_subgraph(const ExperimentGraph& g, const std::set<Vertex>& s) {
    std::map<Vertex, Vertex> renum;
    std::vector<Vertex> vmap;
    for (Vertex v : s) {
        if (v < 0 || v >= g.vertex_count()) throw input_error("induced subgraph: vertex out of range");
        renum[v] = static_cast<Vertex>(vmap.size());
        vmap.push_back(v);
    }
    std::vector<HalfColoredEdge> edges;
    for (const auto& e : g.edges())
        if (renum.count(e.u) && renum.count(e.v))
            edges.emplace_back(renum[e.u], renum[e.v], e.cu, e.cv, e.w);
    return {ExperimentGraph(static_cast<int>(vmap.size()), std::move(edges)), std::move(vmap)};
}

}
