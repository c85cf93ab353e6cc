#include "xgraph/search.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <thread>

#include "xgraph/canonical.hpp"
#include "xgraph/io.hpp"

namespace xgraph {

SearchSpace::SearchSpace()
    : weight_alphabet{GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                      -GaussianRational::i()} {}

namespace {

struct budget_exhausted {};  // internal control flow, caught in run()

bool is_unit(const GaussianRational& w) {
    return w == GaussianRational(1) || w == GaussianRational(-1) || w == GaussianRational::i() ||
           w == -GaussianRational::i();
}

// Enumerates one search (sub)tree. Colorings are digit strings over the
// vertex-pair slots: digit 0 means no edge, the rest encode the half-color
// pair. Colors are admitted in first-appearance order, so the used colors of
// any branch form a prefix {0..k-1}; since the weight phase forces every used
// color to be feasible, mu == k for every graph the search emits.
class Runner {
public:
    // problem
    int n = 0;
    int d = 1;  // colors available to digits (the target when one is set)
    bool mono_only = true;
    bool up_to_iso = true;
    std::optional<int> target;
    std::vector<GaussianRational> alphabet;
    bool units_alphabet = false;
    bool allow_absent = true;  // false when a base skeleton pins the edge set
    std::vector<std::pair<Vertex, Vertex>> slots;
    int digit_count = 2;
    std::uint64_t cap = default_matching_cap();

    // controls
    std::uint64_t budget = 0;  // absolute threshold on res.nodes
    std::size_t max_witnesses = 0;
    std::string checkpoint_path;
    std::uint64_t checkpoint_interval = 0;
    std::vector<int> forced;  // worker task prefix: the only digits tried there
    std::vector<int> spine;   // resume spine: start digits while on it

    SearchResult res;
    std::vector<int> resume_spine;  // where to pick up after a budget stop

    void run() {
        init_state();
        try {
            dfs(0, !spine.empty());
            res.complete = true;
        } catch (const budget_exhausted&) {
            res.complete = false;
        }
    }

private:
    // digit state
    std::vector<int> digits;
    std::vector<std::vector<int>> deg;       // [v][c] half-edge color degree
    std::vector<std::vector<int>> mono_deg;  // [v][c] monochromatic edge count
    std::vector<int> pending;                // undecided slots at v
    int completed = 0;                       // vertices with pending == 0
    int max_color = -1;

    // witness bookkeeping
    std::set<std::string> witness_exact;
    std::set<std::string> witness_canon;
    std::set<std::string> seen_colorings;
    std::uint64_t last_checkpoint = 0;

    // weight-phase state, rebuilt per completed coloring
    std::vector<HalfColoredEdge> active_edges;
    std::vector<std::vector<std::size_t>> membership;  // edge position -> matching ids
    std::vector<int> pm_rem;
    std::vector<GaussianRational> pm_partial;
    std::vector<std::size_t> pm_class;
    std::vector<int> cls_rem;
    std::vector<GaussianRational> cls_sum;
    std::vector<GaussianRational> cls_target;
    std::vector<GaussianRational> wassign;

    void init_state() {
        digits.assign(slots.size(), 0);
        deg.assign(n, std::vector<int>(d, 0));
        mono_deg.assign(n, std::vector<int>(d, 0));
        pending.assign(n, 0);
        for (const auto& [u, v] : slots) {
            ++pending[u];
            ++pending[v];
        }
        completed = 0;
        for (Vertex v = 0; v < n; ++v)
            if (pending[v] == 0) ++completed;
        max_color = -1;
        for (const auto& g : res.witnesses) {
            witness_exact.insert(serialize_graph(g));
            if (up_to_iso) witness_canon.insert(canonical_form(g));
        }
        last_checkpoint = res.nodes;
    }

    void decode(int g, Color& cu, Color& cv) const {
        if (mono_only) {
            cu = cv = g - 1;
        } else {
            cu = (g - 1) / d;
            cv = (g - 1) % d;
        }
    }

    bool admissible(int g) const {
        if (g == 0) return allow_absent;
        Color cu, cv;
        decode(g, cu, cv);
        // first-appearance order keeps one representative per color renaming
        if (cu > max_color + 1) return false;
        int m2 = std::max(max_color, cu);
        if (cv > m2 + 1) return false;
        // a color born after some vertex finished can have no monochromatic
        // edge there, so it could never be feasible
        if (completed > 0 && (cu > max_color || cv > max_color)) return false;
        return true;
    }

    void apply(std::size_t s, int g, int& saved_max, int& saved_completed) {
        saved_max = max_color;
        saved_completed = completed;
        digits[s] = g;
        auto [u, v] = slots[s];
        if (g > 0) {
            Color cu, cv;
            decode(g, cu, cv);
            ++deg[u][cu];
            ++deg[v][cv];
            if (cu == cv) {
                ++mono_deg[u][cu];
                ++mono_deg[v][cu];
            }
            max_color = std::max({max_color, cu, cv});
        }
        if (--pending[u] == 0) ++completed;
        if (--pending[v] == 0) ++completed;
    }

    void undo(std::size_t s, int g, int saved_max, int saved_completed) {
        auto [u, v] = slots[s];
        ++pending[u];
        ++pending[v];
        if (g > 0) {
            Color cu, cv;
            decode(g, cu, cv);
            --deg[u][cu];
            --deg[v][cv];
            if (cu == cv) {
                --mono_deg[u][cu];
                --mono_deg[v][cu];
            }
        }
        digits[s] = 0;
        max_color = saved_max;
        completed = saved_completed;
    }

    // Necessary conditions on a partial assignment; true means cut.
    bool prune_partial() const {
        // every color that must end up feasible needs a monochromatic edge at
        // every vertex, and distinct colors need distinct future slots
        int req = target ? *target : max_color + 1;
        for (Vertex v = 0; v < n; ++v) {
            int missing = 0;
            for (Color c = 0; c < req; ++c)
                if (mono_deg[v][c] == 0) ++missing;
            if (missing > pending[v]) return true;
        }
        int k = max_color + 1;
        long long t = 2LL * k - n + 1;
        if (k >= 1 && t >= 1) {
            // valid graphs keep at least 2mu-n+1 colors at degree exactly 1
            // per vertex; adding colors later only tightens the requirement
            for (Vertex v = 0; v < n; ++v) {
                int ones = 0, zeros = 0;
                for (Color c = 0; c < k; ++c) {
                    if (deg[v][c] == 1) ++ones;
                    if (deg[v][c] == 0) ++zeros;
                }
                long long pot = pending[v] == 0 ? ones : ones + zeros;
                if (pot < t) return true;
            }
        }
        return false;
    }

    bool mono_matchable(Color c) const {
        // perfect matching in the monochromatic color-c subgraph, needed for
        // the coloring mono-c to be feasible at all
        std::vector<unsigned> adj(n, 0);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (digits[s] == 0) continue;
            Color cu, cv;
            decode(digits[s], cu, cv);
            if (cu == c && cv == c) {
                adj[slots[s].first] |= 1u << slots[s].second;
                adj[slots[s].second] |= 1u << slots[s].first;
            }
        }
        std::vector<signed char> memo(1u << n, -1);
        auto rec = [&](auto&& self, unsigned mask) -> bool {
            if (mask == 0) return true;
            if (memo[mask] >= 0) return memo[mask] != 0;
            int v = __builtin_ctz(mask);
            unsigned cand = adj[v] & mask & ~(1u << v);
            bool ok = false;
            while (cand && !ok) {
                int u = __builtin_ctz(cand);
                cand &= cand - 1;
                ok = self(self, mask & ~(1u << v) & ~(1u << u));
            }
            memo[mask] = ok ? 1 : 0;
            return ok;
        };
        return rec(rec, (1u << n) - 1);
    }

    void maybe_checkpoint(std::size_t dep) {
        if (checkpoint_path.empty()) return;
        if (res.nodes - last_checkpoint < checkpoint_interval) return;
        write_checkpoint(std::vector<int>(digits.begin(), digits.begin() + dep), false);
        last_checkpoint = res.nodes;
    }

    void dfs(std::size_t dep, bool on_spine) {
        maybe_checkpoint(dep);
        if (res.nodes >= budget) {
            resume_spine.assign(digits.begin(), digits.begin() + dep);
            throw budget_exhausted{};
        }
        if (dep == slots.size()) {
            complete_coloring();
            return;
        }
        int first = allow_absent ? 0 : 1;
        if (on_spine && dep < spine.size()) first = std::max(first, spine[dep]);
        for (int g = first; g < digit_count; ++g) {
            if (dep < forced.size() && g != forced[dep]) continue;
            ++res.nodes;
            if (!admissible(g)) continue;
            int sm, sc;
            apply(dep, g, sm, sc);
            if (prune_partial()) {
                ++res.pruned;
            } else {
                dfs(dep + 1, on_spine && dep < spine.size() && g == spine[dep]);
            }
            undo(dep, g, sm, sc);
        }
    }

    void complete_coloring() {
        int k = max_color + 1;
        if (k == 0 || (target && k != *target) || k < res.best_mu) {
            ++res.pruned;
            return;
        }
        for (Color c = 0; c < k; ++c) {
            if (!mono_matchable(c)) {
                ++res.pruned;
                return;
            }
        }
        active_edges.clear();
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (digits[s] == 0) continue;
            Color cu, cv;
            decode(digits[s], cu, cv);
            active_edges.emplace_back(slots[s].first, slots[s].second, cu, cv, GaussianRational(1));
        }
        ExperimentGraph skel(n, active_edges);
        if (up_to_iso && !seen_colorings.insert(canonical_form_ignore_weights(skel)).second) {
            ++res.pruned;
            return;
        }
        ++res.explored;

        auto pms = enumerate_perfect_matchings(skel, cap);
        std::map<VertexColoring, std::vector<std::size_t>> classes;
        for (std::size_t i = 0; i < pms.size(); ++i)
            classes[induced_coloring(skel, pms[i])].push_back(i);

        cls_rem.clear();
        cls_sum.clear();
        cls_target.clear();
        pm_class.assign(pms.size(), 0);
        for (const auto& [vc, members] : classes) {
            bool mono = vc.is_monochromatic();
            if (units_alphabet) {
                // unit weights are 1 mod (1+i), so a class of N matchings can
                // only sum to 1 when N is odd and to 0 when N is even
                bool odd = members.size() % 2 != 0;
                if (odd != mono) {
                    ++res.pruned;
                    return;
                }
            }
            std::size_t cls = cls_rem.size();
            for (std::size_t pm : members) pm_class[pm] = cls;
            cls_rem.push_back(static_cast<int>(members.size()));
            cls_sum.push_back(GaussianRational(0));
            cls_target.push_back(mono ? GaussianRational(1) : GaussianRational(0));
        }

        membership.assign(active_edges.size(), {});
        pm_rem.assign(pms.size(), 0);
        pm_partial.assign(pms.size(), GaussianRational(1));
        for (std::size_t i = 0; i < pms.size(); ++i) {
            pm_rem[i] = static_cast<int>(pms[i].edges.size());
            for (std::size_t e : pms[i].edges) membership[e].push_back(i);
        }
        wassign.assign(active_edges.size(), GaussianRational(1));
        weight_rec(0, k);
    }

    void weight_rec(std::size_t pos, int k) {
        if (pos == active_edges.size()) {
            emit_witness(k);
            return;
        }
        for (const auto& w : alphabet) {
            ++res.nodes;
            if (res.nodes >= budget) {
                resume_spine = digits;
                throw budget_exhausted{};
            }
            bool bad = false;
            for (std::size_t pm : membership[pos]) {
                pm_partial[pm] *= w;
                if (--pm_rem[pm] == 0) {
                    std::size_t cls = pm_class[pm];
                    cls_sum[cls] += pm_partial[pm];
                    if (--cls_rem[cls] == 0 && cls_sum[cls] != cls_target[cls]) bad = true;
                }
            }
            if (bad) {
                ++res.pruned;
            } else {
                wassign[pos] = w;
                weight_rec(pos + 1, k);
            }
            for (auto it = membership[pos].rbegin(); it != membership[pos].rend(); ++it) {
                std::size_t pm = *it;
                if (pm_rem[pm] == 0) {
                    std::size_t cls = pm_class[pm];
                    ++cls_rem[cls];
                    cls_sum[cls] -= pm_partial[pm];
                }
                ++pm_rem[pm];
                pm_partial[pm] /= w;
            }
        }
    }

    void emit_witness(int k) {
        std::vector<HalfColoredEdge> edges = active_edges;
        for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = wassign[i];
        ExperimentGraph g(n, std::move(edges));
        Verdict v = verify(g, cap);
        if (!v.is_valid || v.mu != k)
            throw invariant_violation("search emitted a graph that fails re-verification");
        if (k > res.best_mu) {
            res.best_mu = k;
            res.witnesses.clear();
            witness_exact.clear();
            witness_canon.clear();
            res.witnesses_truncated = false;
        }
        if (k < res.best_mu) return;  // cannot trigger today; guards the invariant
        if (!witness_exact.insert(serialize_graph(g)).second) return;
        if (up_to_iso && !witness_canon.insert(canonical_form(g)).second) return;
        if (res.witnesses.size() >= max_witnesses) {
            res.witnesses_truncated = true;
            return;
        }
        res.witnesses.push_back(std::move(g));
    }

public:
    ojson params_json() const {
        ojson p;
        p["n"] = n;
        p["colors"] = d;
        ojson alpha = ojson::array();
        for (const auto& w : alphabet) alpha.push_back(w.key());
        p["alphabet"] = std::move(alpha);
        p["mono_only"] = mono_only;
        p["up_to_iso"] = up_to_iso;
        p["target"] = target ? ojson(*target) : ojson(nullptr);
        p["allow_absent"] = allow_absent;
        ojson sl = ojson::array();
        for (const auto& [u, v] : slots) sl.push_back(ojson::array({u, v}));
        p["slots"] = std::move(sl);
        p["max_witnesses"] = max_witnesses;
        return p;
    }

    void write_checkpoint(const std::vector<int>& sp, bool complete) const {
        ojson j;
        j["version"] = 1;
        j["params"] = params_json();
        j["complete"] = complete;
        j["spine"] = sp;
        j["nodes"] = res.nodes;
        j["explored"] = res.explored;
        j["pruned"] = res.pruned;
        j["best_mu"] = res.best_mu;
        j["witnesses_truncated"] = res.witnesses_truncated;
        ojson ws = ojson::array();
        for (const auto& g : res.witnesses) ws.push_back(graph_to_json(g));
        j["witnesses"] = std::move(ws);
        std::string tmp = checkpoint_path + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw input_error("cannot write checkpoint: " + checkpoint_path);
            out << j.dump(1) << "\n";
        }
        if (std::rename(tmp.c_str(), checkpoint_path.c_str()) != 0)
            throw input_error("cannot write checkpoint: " + checkpoint_path);
    }

    // Returns true when the checkpoint already records a finished search.
    bool load_checkpoint(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw input_error("cannot read checkpoint: " + path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw input_error("malformed checkpoint: " + std::string(e.what()));
        }
        if (!j.is_object() || j.value("version", 0) != 1)
            throw input_error("unrecognized checkpoint format");
        if (json(j.at("params")) != json(params_json()))
            throw input_error("checkpoint was produced by a different search configuration");
        res.nodes = j.at("nodes").get<std::uint64_t>();
        res.explored = j.at("explored").get<std::uint64_t>();
        res.pruned = j.at("pruned").get<std::uint64_t>();
        res.best_mu = j.at("best_mu").get<int>();
        res.witnesses_truncated = j.at("witnesses_truncated").get<bool>();
        res.witnesses.clear();
        for (const auto& wj : j.at("witnesses")) res.witnesses.push_back(load_graph(wj).graph);
        spine = j.at("spine").get<std::vector<int>>();
        return j.at("complete").get<bool>();
    }
};

}  // namespace

SearchResult search_max_dimension(const SearchSpace& space, const SearchOptions& opts) {
    if (space.n <= 0 || space.n % 2 != 0)
        throw input_error("search needs a positive even vertex count");
    if (space.n > 8) throw unsupported_error("search supports at most 8 vertices");
    if (space.max_colors < 1) throw input_error("search needs at least one color");
    if (opts.budget == 0) throw input_error("search budget must be positive");
    if (opts.workers < 1) throw input_error("worker count must be positive");
    if (opts.workers > 1 && (!opts.checkpoint_path.empty() || !opts.resume_path.empty()))
        throw input_error("checkpointing requires a single worker");
    if (opts.target_mu && (*opts.target_mu < 1 || *opts.target_mu > space.max_colors))
        throw input_error("target dimension must lie in [1, max_colors]");

    std::vector<GaussianRational> alphabet = space.weight_alphabet;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    if (alphabet.empty()) throw input_error("weight alphabet must be nonempty");
    for (const auto& w : alphabet)
        if (w.is_zero()) throw input_error("weight alphabet must not contain zero");

    Runner proto;
    proto.n = space.n;
    proto.d = opts.target_mu ? *opts.target_mu : space.max_colors;
    proto.mono_only = space.mono_only;
    proto.up_to_iso = space.up_to_iso;
    proto.target = opts.target_mu;
    proto.alphabet = alphabet;
    proto.units_alphabet = std::all_of(alphabet.begin(), alphabet.end(), is_unit);
    proto.digit_count = 1 + (space.mono_only ? proto.d : proto.d * proto.d);
    proto.max_witnesses = opts.max_witnesses;
    proto.checkpoint_interval = opts.checkpoint_interval;

    if (space.base_graph) {
        if (space.base_graph->vertex_count() != space.n)
            throw input_error("base skeleton must have the searched vertex count");
        proto.allow_absent = false;
        for (const auto& e : space.base_graph->edges()) proto.slots.emplace_back(e.u, e.v);
    } else {
        for (Vertex u = 0; u < space.n; ++u)
            for (Vertex v = u + 1; v < space.n; ++v) proto.slots.emplace_back(u, v);
    }

    if (opts.workers == 1) {
        Runner r = proto;
        r.budget = opts.budget;
        r.checkpoint_path = opts.checkpoint_path;
        if (!opts.resume_path.empty() && r.load_checkpoint(opts.resume_path)) {
            r.res.complete = true;
            return r.res;
        }
        r.run();
        if (!r.checkpoint_path.empty())
            r.write_checkpoint(r.res.complete ? std::vector<int>{} : r.resume_spine,
                               r.res.complete);
        return r.res;
    }

    // Deterministic work split: tasks are the admissible digit prefixes on
    // the first two slots, dealt round-robin to the workers. Merging in task
    // order makes the result independent of thread scheduling.
    std::size_t prefix_len = std::min<std::size_t>(2, proto.slots.size());
    std::vector<std::vector<int>> tasks;
    {
        // Admission at these depths depends only on the running max color and
        // on whether any vertex has run out of slots; both are cheap to track
        // here without a full Runner.
        auto pair_digits = [&](int g, Color& cu, Color& cv) {
            if (proto.mono_only) {
                cu = cv = g - 1;
            } else {
                cu = (g - 1) / proto.d;
                cv = (g - 1) % proto.d;
            }
        };
        std::vector<int> pending(proto.n, 0);
        for (const auto& [u, v] : proto.slots) {
            ++pending[u];
            ++pending[v];
        }
        auto completed_before = [&](std::size_t dep) {
            int done = 0;
            std::vector<int> left = pending;
            for (std::size_t s = 0; s < dep; ++s) {
                --left[proto.slots[s].first];
                --left[proto.slots[s].second];
            }
            for (Vertex v = 0; v < proto.n; ++v)
                if (left[v] == 0) ++done;
            return done;
        };
        int first = proto.allow_absent ? 0 : 1;
        std::vector<int> tup(prefix_len, 0);
        auto rec = [&](auto&& self, std::size_t dep, int max_color) -> void {
            if (dep == prefix_len) {
                tasks.push_back(tup);
                return;
            }
            int completed = completed_before(dep);
            for (int g = first; g < proto.digit_count; ++g) {
                if (g > 0) {
                    Color cu, cv;
                    pair_digits(g, cu, cv);
                    if (cu > max_color + 1) continue;
                    if (cv > std::max(max_color, cu) + 1) continue;
                    if (completed > 0 && (cu > max_color || cv > max_color)) continue;
                }
                tup[dep] = g;
                int m2 = max_color;
                if (g > 0) {
                    Color cu, cv;
                    pair_digits(g, cu, cv);
                    m2 = std::max({max_color, cu, cv});
                }
                self(self, dep + 1, m2);
            }
        };
        rec(rec, 0, -1);
    }

    int workers = std::min<int>(opts.workers, std::max<std::size_t>(tasks.size(), 1));
    std::uint64_t share = std::max<std::uint64_t>(opts.budget / workers, 1);
    std::vector<SearchResult> partial(tasks.size());
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                std::uint64_t used = 0;
                for (std::size_t t = w; t < tasks.size(); t += workers) {
                    Runner r = proto;
                    r.forced = tasks[t];
                    if (used >= share) {
                        partial[t].complete = false;
                        continue;
                    }
                    r.budget = share - used;
                    r.run();
                    used += r.res.nodes;
                    partial[t] = std::move(r.res);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    SearchResult merged;
    merged.complete = true;
    for (const auto& p : partial) {
        merged.nodes += p.nodes;
        merged.explored += p.explored;
        merged.pruned += p.pruned;
        merged.complete = merged.complete && p.complete;
        merged.best_mu = std::max(merged.best_mu, p.best_mu);
    }
    std::set<std::string> exact, canon;
    for (const auto& p : partial) {
        if (p.best_mu != merged.best_mu || merged.best_mu == 0) continue;
        merged.witnesses_truncated = merged.witnesses_truncated || p.witnesses_truncated;
        for (const auto& g : p.witnesses) {
            if (!exact.insert(serialize_graph(g)).second) continue;
            if (proto.up_to_iso && !canon.insert(canonical_form(g)).second) continue;
            if (merged.witnesses.size() >= opts.max_witnesses) {
                merged.witnesses_truncated = true;
                break;
            }
            merged.witnesses.push_back(g);
        }
    }
    return merged;
}

std::string export_polynomial_system(const ExperimentGraph& g,
                                     const std::vector<int>& vertex_labels, std::uint64_t cap) {
    if (!vertex_labels.empty() && vertex_labels.size() != static_cast<std::size_t>(g.vertex_count()))
        throw input_error("vertex label list must cover every vertex");
    auto label = [&](Vertex v) {
        return std::to_string(vertex_labels.empty() ? v : vertex_labels[v]);
    };
    auto pms = enumerate_perfect_matchings(g, cap);
    std::map<VertexColoring, std::vector<const PerfectMatching*>> classes;
    for (const auto& pm : pms) classes[induced_coloring(g, pm)].push_back(&pm);
    std::string out;
    for (const auto& [vc, members] : classes) {
        std::string line;
        for (const auto* pm : members) {
            if (!line.empty()) line += " + ";
            std::string term;
            for (std::size_t e : pm->edges) {
                if (!term.empty()) term += "*";
                term += "x_" + label(g.edge(e).u) + "_" + label(g.edge(e).v);
            }
            line += term;
        }
        line += vc.is_monochromatic() ? " = 1" : " = 0";
        out += line + "\n";
    }
    return out;
}

}
