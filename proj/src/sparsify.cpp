#include "xgraph/sparsify.hpp"

#include <algorithm>
#include <set>

namespace xgraph {

namespace {

bool paranoid_default(const ExperimentGraph& g, std::optional<bool> paranoid) {
    return paranoid.value_or(g.vertex_count() <= 10);
}

std::string edge_str(const HalfColoredEdge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}

PruneResult matching_covered_reduction(const ExperimentGraph& g, std::uint64_t cap) {
    std::vector<bool> covered(g.edge_count(), false);
    for (const auto& pm : enumerate_perfect_matchings(g, cap))
        for (std::size_t idx : pm.edges) covered[idx] = true;
    std::set<std::size_t> drop;
    PruneStep step{"matching-covered", {}, "edges in no perfect matching"};
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!covered[i]) {
            drop.insert(i);
            step.removed.push_back(g.edge(i));
        }
    }
    PruneResult r{g.without_edges(drop), {}};
    if (!drop.empty()) r.trace.steps.push_back(std::move(step));
    return r;
}

PruneResult infeasible_color_prune(const ExperimentGraph& g, std::uint64_t cap) {
    std::set<Color> feasible;
    for (const auto& [vc, entry] : weight_table(g, cap).entries)
        if (!vc.at.empty() && vc.is_monochromatic()) feasible.insert(vc.at[0]);

    ExperimentGraph cur = g;
    PruneTrace trace;
    // A removed edge has a half of an infeasible color; monochromatic
    // matchings of the surviving colors never used such edges, so a single
    // pass over the original feasibility set is enough.
    for (Color c : g.used_colors()) {
        if (feasible.count(c)) continue;
        std::set<std::size_t> drop;
        PruneStep step{"infeasible-color", {},
                       "monochromatic coloring of color " + std::to_string(c) + " is infeasible"};
        for (std::size_t i = 0; i < cur.edge_count(); ++i) {
            const auto& e = cur.edge(i);
            if (e.cu == c || e.cv == c) {
                drop.insert(i);
                step.removed.push_back(e);
            }
        }
        if (!drop.empty()) {
            cur = cur.without_edges(drop);
            trace.steps.push_back(std::move(step));
        }
    }
    return {std::move(cur), std::move(trace)};
}

std::vector<HalfColoredEdge> find_color_isolated_edges(const ExperimentGraph& g) {
    std::vector<HalfColoredEdge> out;
    for (const auto& e : g.edges())
        if (e.monochromatic() && g.color_degree(e.u, e.cu) == 1 && g.color_degree(e.v, e.cu) == 1)
            out.push_back(e);
    return out;
}

namespace {

void check_preserves(const ExperimentGraph& before, const ExperimentGraph& after,
                     const Verdict& v0, std::uint64_t cap, const char* rule) {
    (void)before;
    Verdict v1 = verify(after, cap);
    if (!v1.is_valid || v1.mu != v0.mu)
        throw invariant_violation(std::string(rule) +
                                  " failed to preserve validity or dimension: mu " +
                                  std::to_string(v0.mu) + " -> " +
                                  (v1.is_valid ? std::to_string(v1.mu) : "invalid"));
}

}

PruneResult color_isolated_prune(const ExperimentGraph& g, std::uint64_t cap,
                                 std::optional<bool> paranoid) {
    Verdict v0 = verify(g, cap);
    if (!v0.is_valid)
        throw precondition_error("pruning by color isolation requires a valid graph");
    bool check = paranoid_default(g, paranoid);

    ExperimentGraph cur = g;
    PruneTrace trace;
    for (;;) {
        bool fired = false;
        for (std::size_t i = 0; i < cur.edge_count() && !fired; ++i) {
            const auto& e = cur.edge(i);
            if (!e.monochromatic()) continue;
            Color c = e.cu;
            int du = cur.color_degree(e.u, c);
            int dv = cur.color_degree(e.v, c);
            Vertex anchor, target;
            if (du == 1 && dv >= 2) {
                anchor = e.u;
                target = e.v;
            } else if (dv == 1 && du >= 2) {
                anchor = e.v;
                target = e.u;
            } else {
                continue;
            }
            std::set<std::size_t> drop;
            PruneStep step{"color-isolated", {},
                           "edge " + edge_str(e) + " of color " + std::to_string(c) +
                               " has color degree 1 at " + std::to_string(anchor) +
                               "; removing the competing color-" + std::to_string(c) +
                               " edges at " + std::to_string(target)};
            for (std::size_t j : cur.incident(target)) {
                if (j == i) continue;
                if (cur.edge(j).color_at(target) == c) {
                    drop.insert(j);
                    step.removed.push_back(cur.edge(j));
                }
            }
            ExperimentGraph next = cur.without_edges(drop);
            if (check) check_preserves(cur, next, v0, cap, "color-isolated prune");
            cur = std::move(next);
            trace.steps.push_back(std::move(step));
            fired = true;
        }
        if (!fired) break;
    }
    return {std::move(cur), std::move(trace)};
}

PruneResult prune_to_fixpoint(const ExperimentGraph& g, std::uint64_t cap,
                              std::optional<bool> paranoid) {
    Verdict v0 = verify(g, cap);
    if (!v0.is_valid) throw precondition_error("prune_to_fixpoint requires a valid graph");
    bool check = paranoid_default(g, paranoid);

    ExperimentGraph cur = g;
    PruneTrace trace;
    std::size_t max_rounds = g.edge_count() + 1;
    for (std::size_t round = 0;; ++round) {
        if (round > max_rounds)
            throw invariant_violation("prune fixpoint not reached within the edge-count bound");
        std::size_t before = cur.edge_count();

        auto append = [&trace](PruneResult&& r) {
            for (auto& s : r.trace.steps) trace.steps.push_back(std::move(s));
            return std::move(r.graph);
        };
        cur = append(infeasible_color_prune(cur, cap));
        if (check) check_preserves(g, cur, v0, cap, "infeasible-color prune");
        cur = append(matching_covered_reduction(cur, cap));
        if (check) check_preserves(g, cur, v0, cap, "matching-covered reduction");
        cur = append(color_isolated_prune(cur, cap, paranoid));

        if (cur.edge_count() == before) break;
    }
    if (check) check_preserves(g, cur, v0, cap, "prune pipeline");
    return {std::move(cur), std::move(trace)};
}

ExperimentGraph replay_trace(const ExperimentGraph& g, const PruneTrace& t) {
    ExperimentGraph cur = g;
    for (const auto& step : t.steps) {
        std::set<std::size_t> drop;
        for (const auto& r : step.removed) {
            auto idx = cur.find_edge(r.u, r.v);
            if (!idx) throw invariant_violation("trace replay: edge " + edge_str(r) + " missing");
            const auto& e = cur.edge(*idx);
            if (e.cu != r.cu || e.cv != r.cv || e.w != r.w)
                throw invariant_violation("trace replay: edge " + edge_str(r) + " differs");
            drop.insert(*idx);
        }
        cur = cur.without_edges(drop);
    }
    return cur;
}

}
