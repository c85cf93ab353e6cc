#ifndef XGRAPH_TESTS_HELPERS_HPP
#define XGRAPH_TESTS_HELPERS_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "xgraph/graph.hpp"
#include "xgraph/io.hpp"

namespace xtest {

using namespace xgraph;

inline std::string fixture_path(const std::string& name) {
    return std::string(XGRAPH_TESTS_DIR) + "/fixtures/" + name;
}

inline LoadedGraph load_fixture(const std::string& name) {
    return load_graph_file(fixture_path(name));
}

inline HalfColoredEdge mono(Vertex u, Vertex v, Color c, GaussianRational w = GaussianRational(1)) {
    return HalfColoredEdge(u, v, c, c, std::move(w));
}

inline HalfColoredEdge bi(Vertex u, Vertex v, Color cu, Color cv,
                          GaussianRational w = GaussianRational(1)) {
    return HalfColoredEdge(u, v, cu, cv, std::move(w));
}

// Parses an exported polynomial system ("x_1_6*x_2_3 + ... = 1" per line),
// substitutes each variable with the weight of the edge between the
// correspondingly labeled vertices, and checks every equation exactly.
inline bool poly_system_satisfied(const std::string& system, const ExperimentGraph& g,
                                  const std::vector<int>& labels) {
    std::map<int, Vertex> where;
    for (std::size_t i = 0; i < labels.size(); ++i) where[labels[i]] = static_cast<Vertex>(i);
    std::istringstream in(system);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto eq = line.rfind(" = ");
        if (eq == std::string::npos) return false;
        GaussianRational want(line.substr(eq + 3) == "1" ? 1 : 0);
        GaussianRational sum(0);
        std::istringstream terms(line.substr(0, eq));
        std::string token;
        GaussianRational prod(1);
        bool in_term = false;
        auto flush = [&] {
            if (in_term) sum += prod;
            prod = GaussianRational(1);
            in_term = false;
        };
        while (terms >> token) {
            if (token == "+") {
                flush();
                continue;
            }
            std::istringstream factors(token);
            std::string f;
            while (std::getline(factors, f, '*')) {
                auto p1 = f.find('_');
                auto p2 = f.find('_', p1 + 1);
                if (f.empty() || f[0] != 'x' || p2 == std::string::npos) return false;
                int lu = std::stoi(f.substr(p1 + 1, p2 - p1 - 1));
                int lv = std::stoi(f.substr(p2 + 1));
                auto idx = g.find_edge(where.at(lu), where.at(lv));
                if (!idx) return false;
                prod *= g.edge(*idx).w;
                in_term = true;
            }
        }
        flush();
        if (!(sum == want)) return false;
    }
    return true;
}

// Relabels vertices: perm[old] = new. Validity, mu, and every certificate
// are invariant under this.
inline ExperimentGraph permute_graph(const ExperimentGraph& g, const std::vector<Vertex>& perm) {
    std::vector<HalfColoredEdge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        edges.emplace_back(perm[e.u], perm[e.v], e.cu, e.cv, e.w);
    return ExperimentGraph(g.vertex_count(), std::move(edges));
}

}

#endif
