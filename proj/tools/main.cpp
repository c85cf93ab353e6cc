#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xgraph/canonical.hpp"
#include "xgraph/certificate.hpp"
#include "xgraph/io.hpp"
#include "xgraph/search.hpp"
#include "xgraph/sparsify.hpp"
#include "xgraph/validity.hpp"

namespace {

using namespace xgraph;

// "-" means standard output everywhere a path is taken.
void write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

void write_json(const std::string& path, const ojson& j) { write_text(path, j.dump(2) + "\n"); }

std::string complex_str(const std::complex<double>& z) {
    std::ostringstream s;
    s << z.real();
    if (z.imag() >= 0) s << "+";
    s << z.imag() << "i";
    return s.str();
}

std::string bound_lines(const DimensionReport& rep) {
    std::string s;
    s += "bound " + rep.bound_sqrt2.rendered + (rep.bound_sqrt2.holds ? "  holds" : "  VIOLATED") + "\n";
    s += "bound " + rep.bound_conjecture.rendered +
         (rep.bound_conjecture.holds ? "  holds" : "  open-conjecture violation") + "\n";
    if (rep.is_counterexample_thm)
        s += "** counterexample to the sqrt(2) dimension bound (n > 4) **\n";
    else if (rep.is_counterexample_conj)
        s += "note: exceeds the conjectured bound 2*mu < n (n > 4)\n";
    return s;
}

struct VerifyArgs {
    std::string input;
    std::string json_path;
    bool table = false;
    bool float_mode = false;
    double eps = 1e-9;
};

int run_verify(const VerifyArgs& a, bool dim_only) {
    if (a.float_mode) {
        FloatGraph fg = load_float_graph_file(a.input);
        FloatVerdict v = verify_float(fg, a.eps);
        if (dim_only && !v.is_valid) {
            std::cerr << "graph is invalid; dimension undefined\n";
            return 1;
        }
        DimensionReport rep = make_dimension_report(fg.structure.vertex_count(), v.mu);
        std::string out;
        if (dim_only) {
            out += "mu: " + std::to_string(v.mu) + "\n" + bound_lines(rep);
        } else {
            out += std::string("valid: ") + (v.is_valid ? "yes" : "no") + "\n";
            out += "mu: " + std::to_string(v.mu) + "\n";
            if (v.vacuous) out += "note: vacuously valid (no feasible monochromatic coloring)\n";
            for (const auto& [vc, w] : v.violations)
                out += "violation: " + vc.ket() + " -> " + complex_str(w) + "\n";
            if (v.is_valid) out += bound_lines(rep);
        }
        std::cout << out;
        if (!a.json_path.empty()) {
            ojson j;
            j["valid"] = v.is_valid;
            j["mu"] = v.mu;
            j["vacuous"] = v.vacuous;
            j["eps"] = a.eps;
            j["violations"] = ojson::array();
            for (const auto& [vc, w] : v.violations) {
                ojson row;
                row["coloring"] = vc.ket().substr(1, vc.at.size());
                row["weight_re"] = w.real();
                row["weight_im"] = w.imag();
                j["violations"].push_back(std::move(row));
            }
            if (v.is_valid) j["bounds"] = dimension_report_to_json(rep);
            write_json(a.json_path, j);
        }
        return v.is_valid ? 0 : 1;
    }

    LoadedGraph lg = load_graph_file(a.input);
    Verdict v = verify(lg.graph);
    if (dim_only && !v.is_valid) {
        std::cerr << "graph is invalid; dimension undefined (first violation: " +
                         v.violations.front().first.ket() + " -> " +
                         v.violations.front().second.str() + ")\n";
        return 1;
    }
    DimensionReport rep = make_dimension_report(lg.graph.vertex_count(), v.mu);
    std::string out;
    if (dim_only) {
        out += "mu: " + std::to_string(v.mu) + "\n" + bound_lines(rep);
    } else {
        out += std::string("valid: ") + (v.is_valid ? "yes" : "no") + "\n";
        out += "mu: " + std::to_string(v.mu) + "\n";
        out += "perfect matchings: " + std::to_string(v.table.total_matchings()) + "\n";
        if (v.vacuous) out += "note: vacuously valid (no feasible monochromatic coloring)\n";
        for (const auto& [vc, w] : v.violations)
            out += "violation: " + vc.ket() + " -> " + w.str() + "\n";
        if (v.is_valid) out += bound_lines(rep);
    }
    if (a.table) {
        out += "weight table:\n";
        for (const auto& [vc, entry] : v.table.entries)
            out += "  " + vc.ket() + " -> " + entry.weight.str() + "  (" +
                   std::to_string(entry.matching_count) +
                   (entry.matching_count == 1 ? " matching)\n" : " matchings)\n");
    }
    std::cout << out;
    if (!a.json_path.empty()) {
        ojson j = verdict_to_json(v);
        if (v.is_valid) j["bounds"] = dimension_report_to_json(rep);
        write_json(a.json_path, j);
    }
    return v.is_valid ? 0 : 1;
}

int run_prune(const std::string& input, const std::string& output, const std::string& trace_path,
              bool paranoid) {
    LoadedGraph lg = load_graph_file(input);
    PruneResult pr = prune_to_fixpoint(lg.graph, default_matching_cap(),
                                       paranoid ? std::optional<bool>(true) : std::nullopt);
    for (const auto& step : pr.trace.steps) {
        std::cout << step.rule << ": removed " << step.removed.size()
                  << (step.removed.size() == 1 ? " edge" : " edges") << " (" << step.justification
                  << ")\n";
    }
    std::cout << "edges: " << lg.graph.edge_count() << " -> " << pr.graph.edge_count() << "\n";
    write_text(output, serialize_graph(pr.graph));
    if (!trace_path.empty()) {
        ojson t;
        t["input_edges"] = lg.graph.edge_count();
        t["output_edges"] = pr.graph.edge_count();
        t["steps"] = ojson::array();
        for (const auto& step : pr.trace.steps) {
            ojson s;
            s["rule"] = step.rule;
            s["justification"] = step.justification;
            s["removed"] = ojson::array();
            for (const auto& e : step.removed) {
                ojson je;
                je["u"] = e.u;
                je["v"] = e.v;
                je["cu"] = e.cu;
                je["cv"] = e.cv;
                je["w"] = weight_to_json(e.w);
                s["removed"].push_back(std::move(je));
            }
            t["steps"].push_back(std::move(s));
        }
        write_json(trace_path, t);
    }
    return 0;
}

int run_certify(const std::string& input, std::optional<int> color, const std::string& json_path) {
    LoadedGraph lg = load_graph_file(input);
    CertificateReport rep = certificate_report(lg.graph);
    bool all = true;
    std::string out = "n=" + std::to_string(rep.n) + " mu=" + std::to_string(rep.mu) + "\n";
    ojson checks = ojson::array();
    for (const auto& c : rep.checks) {
        if (color && c.color >= 0 && c.color != *color) continue;
        if (c.applicable && !c.holds) all = false;
        std::string tag = !c.applicable ? "n/a " : c.holds ? "ok  " : "FAIL";
        out += "[" + tag + "] " + c.name;
        if (c.color >= 0) out += " color=" + std::to_string(c.color);
        if (c.base)
            out += " base=(" + std::to_string(c.base->first) + "," +
                   std::to_string(c.base->second) + ")";
        if (!c.hypothesis.empty()) out += " {" + c.hypothesis + "}";
        out += "  " + c.inequality;
        if (!c.note.empty()) out += "  [" + c.note + "]";
        out += "\n";

        ojson jc;
        jc["name"] = c.name;
        jc["color"] = c.color;
        if (c.base) jc["base"] = ojson::array({c.base->first, c.base->second});
        jc["inequality"] = c.inequality;
        jc["applicable"] = c.applicable;
        jc["holds"] = c.holds;
        jc["hypothesis"] = c.hypothesis;
        jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    out += all ? "all applicable checks hold\n" : "SOME APPLICABLE CHECKS FAIL\n";
    std::cout << out;
    if (!json_path.empty()) {
        ojson j;
        j["n"] = rep.n;
        j["mu"] = rep.mu;
        j["all_hold"] = all;
        j["checks"] = std::move(checks);
        write_json(json_path, j);
    }
    return all ? 0 : 1;
}

struct SearchArgs {
    int n = 0;
    int colors = 1;
    std::string weights = "i4";
    bool mono_only = true;
    bool up_to_iso = true;
    std::uint64_t budget = 100'000'000;
    std::optional<int> target;
    std::size_t max_witnesses = 100;
    int workers = 1;
    std::string checkpoint, resume, base, json_path;
};

int run_search(const SearchArgs& a) {
    SearchSpace space;
    space.n = a.n;
    space.max_colors = a.colors;
    space.mono_only = a.mono_only;
    space.up_to_iso = a.up_to_iso;
    if (a.weights == "one")
        space.weight_alphabet = {GaussianRational(1)};
    else if (a.weights == "pm1")
        space.weight_alphabet = {GaussianRational(1), GaussianRational(-1)};
    else if (a.weights == "i4")
        space.weight_alphabet = {GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                 -GaussianRational::i()};
    else
        throw input_error("--weights must be one, pm1, or i4");
    if (!a.base.empty()) space.base_graph = load_graph_file(a.base).graph;

    SearchOptions opts;
    opts.budget = a.budget;
    opts.target_mu = a.target;
    opts.max_witnesses = a.max_witnesses;
    opts.workers = a.workers;
    opts.checkpoint_path = a.checkpoint;
    opts.resume_path = a.resume;

    SearchResult r = search_max_dimension(space, opts);
    std::cout << "best mu: " << r.best_mu << "\n";
    std::cout << "witnesses: " << r.witnesses.size() << (r.witnesses_truncated ? " (truncated)" : "")
              << "\n";
    std::cout << "colorings explored: " << r.explored << ", branches pruned: " << r.pruned
              << ", nodes: " << r.nodes << "\n";
    std::cout << (r.complete ? "search complete\n" : "budget exhausted before completion\n");
    if (!a.json_path.empty()) {
        ojson j;
        j["best_mu"] = r.best_mu;
        j["complete"] = r.complete;
        j["explored"] = r.explored;
        j["pruned"] = r.pruned;
        j["nodes"] = r.nodes;
        j["witnesses_truncated"] = r.witnesses_truncated;
        j["witnesses"] = ojson::array();
        for (const auto& g : r.witnesses) j["witnesses"].push_back(graph_to_json(g));
        write_json(a.json_path, j);
    }
    if (!r.complete) {
        std::cerr << "budget exhausted; result is partial"
                  << (a.checkpoint.empty() ? "" : " (checkpoint written)") << "\n";
        return 2;
    }
    if (a.target && r.best_mu < *a.target) return 1;
    return r.witnesses.empty() ? 1 : 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"edge-colored experiment graphs: validity, dimension, sparsification, "
                 "certificates, exhaustive search"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "decide validity and report the weight table");
    verify_cmd->add_option("input", va.input, "graph JSON file")->required();
    verify_cmd->add_flag("--table", va.table, "print the full weight table");
    verify_cmd->add_option("--json", va.json_path, "write a JSON report to this path (- = stdout)");
    verify_cmd->add_flag("--float", va.float_mode, "approximate weights with tolerance --eps");
    verify_cmd->add_option("--eps", va.eps, "tolerance for --float")->default_val(1e-9);

    VerifyArgs da;
    auto* dim_cmd = app.add_subcommand("dim", "dimension of a valid graph plus the exact bounds");
    dim_cmd->add_option("input", da.input, "graph JSON file")->required();
    dim_cmd->add_option("--json", da.json_path, "write a JSON report to this path (- = stdout)");
    dim_cmd->add_flag("--float", da.float_mode, "approximate weights with tolerance --eps");
    dim_cmd->add_option("--eps", da.eps, "tolerance for --float")->default_val(1e-9);

    std::string pr_in, pr_out, pr_trace;
    bool pr_paranoid = false;
    auto* prune_cmd = app.add_subcommand("prune", "run the sparsification rules to a fixpoint");
    prune_cmd->add_option("input", pr_in, "graph JSON file")->required();
    prune_cmd->add_option("-o,--output", pr_out, "output graph path (- = stdout)")->required();
    prune_cmd->add_option("--trace", pr_trace, "write the removal trace as JSON");
    prune_cmd->add_flag("--paranoid", pr_paranoid,
                        "re-verify validity and mu after every removal batch");

    std::string ce_in, ce_json;
    int ce_color = -1;
    auto* certify_cmd = app.add_subcommand("certify", "evaluate the structural certificates");
    certify_cmd->add_option("input", ce_in, "graph JSON file")->required();
    auto* ce_color_opt = certify_cmd->add_option("--color", ce_color, "restrict to one color");
    certify_cmd->add_option("--json", ce_json, "write a JSON report to this path (- = stdout)");

    SearchArgs sa;
    int sa_target = 0;
    auto* search_cmd = app.add_subcommand("search", "exhaustive scan for maximum-dimension graphs");
    search_cmd->add_option("--n", sa.n, "vertex count (even, <= 8)")->required();
    search_cmd->add_option("--colors", sa.colors, "number of colors")->required();
    search_cmd->add_option("--weights", sa.weights, "weight alphabet: one, pm1, i4")
        ->default_val("i4");
    search_cmd->add_flag("--mono-only,!--bichromatic", sa.mono_only,
                         "restrict to monochromatic edges (default on)");
    search_cmd->add_flag("--up-to-iso,!--all-labelings", sa.up_to_iso,
                         "deduplicate isomorphic colorings (default on)");
    search_cmd->add_option("--budget", sa.budget, "node budget before giving up");
    auto* sa_target_opt =
        search_cmd->add_option("--target-mu", sa_target, "require exactly this dimension");
    search_cmd->add_option("--max-witnesses", sa.max_witnesses, "witness list cap");
    search_cmd->add_option("--workers", sa.workers, "deterministic parallel split");
    search_cmd->add_option("--checkpoint", sa.checkpoint, "write resumable state here");
    search_cmd->add_option("--resume", sa.resume, "resume from a checkpoint file");
    search_cmd->add_option("--base", sa.base, "restrict edges to this skeleton's edge set");
    search_cmd->add_option("--json", sa.json_path, "write results as JSON (- = stdout)");

    std::string dot_in, dot_out = "-";
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a graph");
    dot_cmd->add_option("input", dot_in, "graph JSON file")->required();
    dot_cmd->add_option("-o,--output", dot_out, "output path (default stdout)");

    std::string poly_in, poly_out = "-";
    auto* poly_cmd = app.add_subcommand(
        "export-poly", "polynomial system whose solutions are the valid weightings");
    poly_cmd->add_option("input", poly_in, "skeleton graph JSON file")->required();
    poly_cmd->add_option("-o,--output", poly_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) return run_verify(va, false);
        if (*dim_cmd) return run_verify(da, true);
        if (*prune_cmd) return run_prune(pr_in, pr_out, pr_trace, pr_paranoid);
        if (*certify_cmd)
            return run_certify(ce_in,
                               ce_color_opt->count() ? std::optional<int>(ce_color) : std::nullopt,
                               ce_json);
        if (*search_cmd) {
            if (sa_target_opt->count()) sa.target = sa_target;
            return run_search(sa);
        }
        if (*dot_cmd) {
            LoadedGraph lg = load_graph_file(dot_in);
            write_text(dot_out, to_dot(lg.graph, lg.vertex_labels));
            return 0;
        }
        if (*poly_cmd) {
            LoadedGraph lg = load_graph_file(poly_in);
            write_text(poly_out, export_polynomial_system(lg.graph, lg.vertex_labels));
            return 0;
        }
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_violation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
