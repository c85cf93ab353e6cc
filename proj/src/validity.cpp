#include "xgraph/validity.hpp"

#include <cmath>
#include <sstream>

namespace xgraph {

Verdict verify(const ExperimentGraph& g, std::uint64_t cap) {
    Verdict v;
    v.table = weight_table(g, cap);
    v.color_class_count = static_cast<int>(g.used_colors().size());
    v.is_valid = true;
    for (const auto& [vc, entry] : v.table.entries) {
        if (vc.at.empty()) continue;  // n = 0: one empty matching, nothing to check
        if (vc.is_monochromatic()) {
            if (entry.weight.is_one()) {
                v.feasible_mono_colors.insert(vc.at[0]);
            } else {
                v.is_valid = false;
                v.violations.emplace_back(vc, entry.weight);
            }
        } else if (!entry.weight.is_zero()) {
            v.is_valid = false;
            v.violations.emplace_back(vc, entry.weight);
        }
    }
    v.mu = v.is_valid ? static_cast<int>(v.feasible_mono_colors.size()) : 0;
    v.vacuous = v.is_valid && v.mu == 0;
    return v;
}

int dimension(const ExperimentGraph& g, std::uint64_t cap) {
    Verdict v = verify(g, cap);
    if (!v.is_valid) {
        std::string what = "dimension is defined only for valid graphs; " +
                           std::to_string(v.violations.size()) + " violating coloring(s), first: " +
                           v.violations.front().first.ket() + " -> " +
                           v.violations.front().second.str();
        throw precondition_error(what);
    }
    return v.mu;
}

DimensionReport make_dimension_report(int n, int mu) {
    DimensionReport r;
    r.n = n;
    r.mu = mu;
    long long n2 = static_cast<long long>(n) * n;
    long long mu2 = 2LL * mu * mu;
    r.bound_sqrt2 = {mu2, n2, mu2 <= n2,
                     "2*mu^2 = " + std::to_string(mu2) + (mu2 <= n2 ? " <= " : " > ") +
                         "n^2 = " + std::to_string(n2)};
    long long mu_twice = 2LL * mu;
    r.bound_conjecture = {mu_twice, static_cast<long long>(n), mu_twice < n,
                          "2*mu = " + std::to_string(mu_twice) + (mu_twice < n ? " < " : " >= ") +
                              "n = " + std::to_string(n)};
    r.is_counterexample_thm = n > 4 && !r.bound_sqrt2.holds;
    r.is_counterexample_conj = n > 4 && !r.bound_conjecture.holds;
    return r;
}

DimensionReport bound_report(const ExperimentGraph& g, std::uint64_t cap) {
    return make_dimension_report(g.vertex_count(), dimension(g, cap));
}

std::vector<std::pair<Vertex, Color>> check_monoedge_property(const ExperimentGraph& g) {
    std::vector<std::pair<Vertex, Color>> failures;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Color i : g.used_colors()) {
            bool found = false;
            for (std::size_t idx : g.incident(v)) {
                const auto& e = g.edge(idx);
                if (e.monochromatic() && e.cu == i) {
                    found = true;
                    break;
                }
            }
            if (!found) failures.emplace_back(v, i);
        }
    }
    return failures;
}

FloatVerdict verify_float(const FloatGraph& fg, double eps, std::uint64_t cap) {
    const ExperimentGraph& g = fg.structure;
    if (fg.weights.size() != g.edge_count())
        throw input_error("float weights must match the edge count");
    std::map<VertexColoring, std::complex<double>> sums;
    for (const auto& pm : enumerate_perfect_matchings(g, cap)) {
        std::complex<double> w{1.0, 0.0};
        for (std::size_t idx : pm.edges) w *= fg.weights[idx];
        sums[induced_coloring(g, pm)] += w;
    }
    FloatVerdict v;
    v.is_valid = true;
    int mono_ok = 0;
    for (const auto& [vc, w] : sums) {
        if (vc.at.empty()) continue;
        bool ok = vc.is_monochromatic() ? std::abs(w - std::complex<double>{1.0, 0.0}) <= eps
                                        : std::abs(w) <= eps;
        if (ok) {
            if (vc.is_monochromatic()) ++mono_ok;
        } else {
            v.is_valid = false;
            v.violations.emplace_back(vc, w);
        }
    }
    v.mu = v.is_valid ? mono_ok : 0;
    v.vacuous = v.is_valid && v.mu == 0;
    return v;
}

}
