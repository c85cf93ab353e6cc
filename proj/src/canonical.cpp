#include "xgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace xgraph {

namespace {

// Encoding of g under a vertex permutation: relabeled edges sorted by
// endpoint pair, colors renamed in order of first appearance along that
// sorted list. The minimum over all permutations is permutation-invariant
// in both vertices and colors; including the weight keeps it injective on
// the graph itself.
std::string encode_under(const ExperimentGraph& g, const std::vector<Vertex>& perm,
                         bool with_weights) {
    struct Row {
        Vertex u, v;
        Color cu, cv;
        const GaussianRational* w;
    };
    std::vector<Row> rows;
    rows.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        Row r{perm[e.u], perm[e.v], e.cu, e.cv, &e.w};
        if (r.u > r.v) {
            std::swap(r.u, r.v);
            std::swap(r.cu, r.cv);
        }
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    std::map<Color, int> rename;
    auto renamed = [&rename](Color c) {
        auto [it, fresh] = rename.emplace(c, static_cast<int>(rename.size()));
        (void)fresh;
        return it->second;
    };
    std::string s = "n" + std::to_string(g.vertex_count()) + ";";
    for (const auto& r : rows) {
        s += std::to_string(r.u) + "," + std::to_string(r.v) + "," +
             std::to_string(renamed(r.cu)) + "," + std::to_string(renamed(r.cv));
        if (with_weights) s += "," + r.w->key();
        s += ";";
    }
    return s;
}

std::string canonical_impl(const ExperimentGraph& g, bool with_weights) {
    if (g.vertex_count() > 10)
        throw unsupported_error("canonical form is exhaustive over vertex permutations; n <= 10 required");
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = encode_under(g, perm, with_weights);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::string s = encode_under(g, perm, with_weights);
        if (s < best) best = std::move(s);
    }
    return best;
}

}

std::string canonical_form(const ExperimentGraph& g) { return canonical_impl(g, true); }

std::string canonical_form_ignore_weights(const ExperimentGraph& g) {
    return canonical_impl(g, false);
}

bool isomorphic(const ExperimentGraph& a, const ExperimentGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}
