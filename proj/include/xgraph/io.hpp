#ifndef XGRAPH_IO_HPP
#define XGRAPH_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xgraph/graph.hpp"
#include "xgraph/validity.hpp"

namespace xgraph {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// Result of loading a graph document. Vertices are shifted to 0-based when
// the file is 1-based (explicit "one_based": true, or detected when every
// endpoint is >= 1 and some endpoint equals the vertex count). Colors are
// remapped to the contiguous range [0, d) by first appearance over the
// sorted edge list unless they already are contiguous from 0, in which case
// the labels are kept as written. color_labels[k] is the original label of
// internal color k; vertex_labels[v] is the original id of internal vertex v.
struct LoadedGraph {
    ExperimentGraph graph;
    bool one_based = false;
    std::vector<int> color_labels;
    std::vector<int> vertex_labels;
};

LoadedGraph load_graph(const json& doc);
LoadedGraph load_graph_string(const std::string& text);
LoadedGraph load_graph_file(const std::string& path);

// Serialization is always 0-based with internal (normalized) colors; weights
// in {1, -1, i, -i} use the string shorthand. parse(serialize(g)) == g for
// any graph whose colors are contiguous from 0.
ojson graph_to_json(const ExperimentGraph& g);
std::string serialize_graph(const ExperimentGraph& g);

// Floating-weight variant for approximate data; accepts plain JSON numbers
// for "re"/"im" in addition to [num, den] pairs.
FloatGraph load_float_graph_file(const std::string& path);

// Graphviz export. One edge line per edge; a bi-chromatic edge gets the
// two-segment color syntax "colorA;0.5:colorB". vertex_labels, when given,
// must have size n and replaces the 0-based ids in the output.
std::string to_dot(const ExperimentGraph& g, const std::vector<int>& vertex_labels = {});

// Rational / weight encodings shared by all JSON outputs: a rational is
// [num, den] with each component a JSON number when it fits in int64 and a
// decimal string otherwise.
ojson rational_to_json(const Rational& r);
ojson weight_to_json(const GaussianRational& w);
GaussianRational weight_from_json(const json& j);

ojson weight_table_to_json(const WeightTable& t);
ojson verdict_to_json(const Verdict& v);
ojson dimension_report_to_json(const DimensionReport& r);

}

#endif
