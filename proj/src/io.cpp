#include "xgraph/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace xgraph {

namespace {

const long long kI64Max = std::numeric_limits<long long>::max();
const long long kI64Min = std::numeric_limits<long long>::min();

ojson bigint_to_json(const BigInt& v) {
    if (v <= kI64Max && v >= kI64Min) return static_cast<long long>(v);
    return v.str();
}

BigInt bigint_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw input_error(std::string("malformed rational: bad ") + what);
        }
    }
    throw input_error(std::string("malformed rational: ") + what +
                      " must be an integer or a decimal string");
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
    if (j.is_array()) {
        if (j.size() != 2) throw input_error("malformed rational: expected [num, den]");
        BigInt num = bigint_from_json(j[0], "numerator");
        BigInt den = bigint_from_json(j[1], "denominator");
        if (den == 0) throw input_error("malformed rational: zero denominator");
        return Rational(num, den);
    }
    if (j.is_number_float())
        throw input_error("malformed rational: floating values need --float mode");
    throw input_error("malformed rational: expected integer or [num, den]");
}

std::string coloring_key(const VertexColoring& vc) {
    bool wide = false;
    for (Color c : vc.at)
        if (c > 9) wide = true;
    std::string s;
    for (std::size_t i = 0; i < vc.at.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(vc.at[i]);
    }
    return s;
}

struct RawEdge {
    long long u, v;
    Color cu, cv;
    json w;
};

std::vector<RawEdge> raw_edges(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices"))
        throw input_error("graph document must be an object with a \"vertices\" field");
    if (!doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 0)
        throw input_error("\"vertices\" must be a non-negative integer");
    std::vector<RawEdge> out;
    if (!doc.contains("edges")) return out;
    if (!doc["edges"].is_array()) throw input_error("\"edges\" must be an array");
    for (const auto& je : doc["edges"]) {
        if (!je.is_object() || !je.contains("u") || !je.contains("v"))
            throw input_error("each edge needs \"u\" and \"v\"");
        RawEdge r;
        r.u = je["u"].get<long long>();
        r.v = je["v"].get<long long>();
        r.cu = je.value("cu", 0);
        r.cv = je.value("cv", 0);
        r.w = je.contains("w") ? je["w"] : json("1");
        out.push_back(std::move(r));
    }
    return out;
}

// Explicit "one_based" wins; otherwise 1-based is assumed exactly when no
// endpoint is 0 and some endpoint equals the vertex count (out of range for
// 0-based ids).
bool detect_one_based(const json& doc, const std::vector<RawEdge>& edges, long long n) {
    if (doc.contains("one_based")) {
        if (!doc["one_based"].is_boolean()) throw input_error("\"one_based\" must be a boolean");
        return doc["one_based"].get<bool>();
    }
    bool any_zero = false, any_n = false;
    for (const auto& e : edges) {
        if (e.u == 0 || e.v == 0) any_zero = true;
        if (e.u == n || e.v == n) any_n = true;
    }
    if (any_zero && any_n) throw input_error("edge endpoints mix 0 and the vertex count");
    return any_n && !any_zero;
}

}

GaussianRational weight_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "1") return GaussianRational(1);
        if (s == "-1") return GaussianRational(-1);
        if (s == "i") return GaussianRational::i();
        if (s == "-i") return -GaussianRational::i();
        throw input_error("weight shorthand must be one of \"1\", \"-1\", \"i\", \"-i\"");
    }
    if (j.is_number_integer()) return GaussianRational(Rational(BigInt(j.get<long long>())));
    if (j.is_object()) {
        Rational re = j.contains("re") ? rational_from_json(j["re"]) : Rational(0);
        Rational im = j.contains("im") ? rational_from_json(j["im"]) : Rational(0);
        return GaussianRational(std::move(re), std::move(im));
    }
    throw input_error("weight must be a shorthand string, integer, or {\"re\", \"im\"} object");
}

ojson rational_to_json(const Rational& r) {
    return ojson::array({bigint_to_json(numerator(r)), bigint_to_json(denominator(r))});
}

ojson weight_to_json(const GaussianRational& w) {
    if (w.is_one()) return "1";
    if (w == GaussianRational(-1)) return "-1";
    if (w == GaussianRational::i()) return "i";
    if (w == -GaussianRational::i()) return "-i";
    ojson j;
    j["re"] = rational_to_json(w.re);
    j["im"] = rational_to_json(w.im);
    return j;
}

LoadedGraph load_graph(const json& doc) {
    long long n = doc.is_object() && doc.contains("vertices") && doc["vertices"].is_number_integer()
                      ? doc["vertices"].get<long long>()
                      : -1;
    auto raw = raw_edges(doc);
    bool one_based = detect_one_based(doc, raw, n);
    std::vector<HalfColoredEdge> edges;
    edges.reserve(raw.size());
    for (const auto& r : raw) {
        long long u = r.u - (one_based ? 1 : 0);
        long long v = r.v - (one_based ? 1 : 0);
        if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge endpoint out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v), r.cu, r.cv,
                           weight_from_json(r.w));
    }
    ExperimentGraph g(static_cast<int>(n), std::move(edges));

    // Color normalization: keep labels that are already contiguous from 0,
    // otherwise renumber by first appearance over the sorted edge list.
    LoadedGraph out;
    out.one_based = one_based;
    std::vector<Color> used = g.used_colors();
    bool contiguous = true;
    for (std::size_t k = 0; k < used.size(); ++k)
        if (used[k] != static_cast<Color>(k)) contiguous = false;
    if (contiguous) {
        out.color_labels.assign(used.begin(), used.end());
        out.graph = std::move(g);
    } else {
        std::map<Color, Color> remap;
        auto norm = [&](Color c) {
            auto [it, fresh] = remap.emplace(c, static_cast<Color>(remap.size()));
            if (fresh) out.color_labels.push_back(c);
            return it->second;
        };
        std::vector<HalfColoredEdge> renamed;
        renamed.reserve(g.edge_count());
        for (const auto& e : g.edges()) {
            // sequenced explicitly: argument evaluation order would otherwise
            // decide which label becomes color 0
            Color nu = norm(e.cu);
            Color nv = norm(e.cv);
            renamed.emplace_back(e.u, e.v, nu, nv, e.w);
        }
        out.graph = ExperimentGraph(g.vertex_count(), std::move(renamed));
    }
    out.vertex_labels.resize(out.graph.vertex_count());
    for (Vertex v = 0; v < out.graph.vertex_count(); ++v)
        out.vertex_labels[v] = v + (one_based ? 1 : 0);
    return out;
}

LoadedGraph load_graph_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    return load_graph(doc);
}

LoadedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph_string(buf.str());
}

ojson graph_to_json(const ExperimentGraph& g) {
    ojson j;
    j["vertices"] = g.vertex_count();
    j["edges"] = ojson::array();
    for (const auto& e : g.edges()) {
        ojson je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["cu"] = e.cu;
        je["cv"] = e.cv;
        je["w"] = weight_to_json(e.w);
        j["edges"].push_back(std::move(je));
    }
    return j;
}

std::string serialize_graph(const ExperimentGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

FloatGraph load_float_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    long long n = doc.is_object() && doc.contains("vertices") && doc["vertices"].is_number_integer()
                      ? doc["vertices"].get<long long>()
                      : -1;
    auto raw = raw_edges(doc);
    bool one_based = detect_one_based(doc, raw, n);

    auto approx = [](const json& j) -> double {
        if (j.is_number()) return j.get<double>();
        if (j.is_array() && j.size() == 2) {
            Rational r = rational_from_json(j);
            return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
        }
        if (j.is_string()) throw input_error("float mode: \"re\"/\"im\" must be numeric");
        throw input_error("float mode: \"re\"/\"im\" must be numeric");
    };

    struct Rec {
        HalfColoredEdge e;
        std::complex<double> w;
    };
    std::vector<Rec> recs;
    recs.reserve(raw.size());
    for (const auto& r : raw) {
        long long u = r.u - (one_based ? 1 : 0);
        long long v = r.v - (one_based ? 1 : 0);
        if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge endpoint out of range");
        std::complex<double> w{1.0, 0.0};
        if (r.w.is_string()) {
            GaussianRational g = weight_from_json(r.w);
            w = {static_cast<double>(numerator(g.re)), static_cast<double>(numerator(g.im))};
        } else if (r.w.is_number()) {
            w = {r.w.get<double>(), 0.0};
        } else if (r.w.is_object()) {
            w = {r.w.contains("re") ? approx(r.w["re"]) : 0.0,
                 r.w.contains("im") ? approx(r.w["im"]) : 0.0};
        } else {
            throw input_error("weight must be a shorthand string, number, or {\"re\", \"im\"} object");
        }
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw input_error("weights must be finite");
        if (w == std::complex<double>{0.0, 0.0}) throw input_error("edge weights must be nonzero");
        recs.push_back({HalfColoredEdge(static_cast<Vertex>(u), static_cast<Vertex>(v), r.cu, r.cv,
                                        GaussianRational(1)),
                        w});
    }
    // Keep the weight array aligned with the constructor's (u, v) sort;
    // pairs are unique, so this order matches it exactly.
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        if (a.e.u != b.e.u) return a.e.u < b.e.u;
        return a.e.v < b.e.v;
    });
    FloatGraph fg;
    std::vector<HalfColoredEdge> edges;
    for (auto& r : recs) {
        edges.push_back(r.e);
        fg.weights.push_back(r.w);
    }
    fg.structure = ExperimentGraph(static_cast<int>(n), std::move(edges));
    return fg;
}

namespace {

const char* kPalette[10] = {"red",    "green", "blue",    "orange", "purple",
                            "brown",  "cyan",  "magenta", "gold",   "gray"};

std::string dot_color(Color c) { return kPalette[c % 10]; }

}

std::string to_dot(const ExperimentGraph& g, const std::vector<int>& vertex_labels) {
    if (!vertex_labels.empty() && vertex_labels.size() != static_cast<std::size_t>(g.vertex_count()))
        throw input_error("vertex label list must cover every vertex");
    auto name = [&](Vertex v) {
        return std::to_string(vertex_labels.empty() ? v : vertex_labels[v]);
    };
    std::string s = "graph G {\n";
    if (g.vertex_count() > 0) s += "  node [shape=circle];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) s += "  " + name(v) + ";\n";
    for (const auto& e : g.edges()) {
        std::string color = e.monochromatic()
                                ? dot_color(e.cu)
                                : dot_color(e.cu) + ";0.5:" + dot_color(e.cv);
        s += "  " + name(e.u) + " -- " + name(e.v) + " [color=\"" + color + "\", label=\"" +
             e.w.str() + "\"];\n";
    }
    s += "}\n";
    return s;
}

ojson weight_table_to_json(const WeightTable& t) {
    ojson arr = ojson::array();
    for (const auto& [vc, entry] : t.entries) {
        ojson row;
        row["coloring"] = coloring_key(vc);
        row["weight"] = weight_to_json(entry.weight);
        row["matchings"] = entry.matching_count;
        arr.push_back(std::move(row));
    }
    return arr;
}

ojson verdict_to_json(const Verdict& v) {
    ojson j;
    j["valid"] = v.is_valid;
    j["mu"] = v.mu;
    j["vacuous"] = v.vacuous;
    j["feasible_mono_colors"] = v.feasible_mono_colors;
    j["color_class_count"] = v.color_class_count;
    j["violations"] = ojson::array();
    for (const auto& [vc, w] : v.violations) {
        ojson row;
        row["coloring"] = coloring_key(vc);
        row["weight"] = weight_to_json(w);
        j["violations"].push_back(std::move(row));
    }
    j["weight_table"] = weight_table_to_json(v.table);
    return j;
}

ojson dimension_report_to_json(const DimensionReport& r) {
    auto cmp = [](const BoundComparison& b) {
        ojson j;
        j["lhs"] = b.lhs;
        j["rhs"] = b.rhs;
        j["holds"] = b.holds;
        j["rendered"] = b.rendered;
        return j;
    };
    ojson j;
    j["n"] = r.n;
    j["mu"] = r.mu;
    j["bound_sqrt2"] = cmp(r.bound_sqrt2);
    j["bound_conjecture"] = cmp(r.bound_conjecture);
    j["counterexample_theorem"] = r.is_counterexample_thm;
    j["counterexample_conjecture"] = r.is_counterexample_conj;
    return j;
}

}
