// Text formats: graph files (.sg), diagram files (.sgd) with inline graphs
// or `use` references, and pair-table files (.eps.txt).
#pragma once

#include <string>
#include <vector>

#include "sgi/diagram.hpp"
#include "sgi/epsilon.hpp"
#include "sgi/graph.hpp"

namespace sgi {

// .sg: `graph <name>` then `vertex <id>` and `edge <label> <tail> <head>`
// lines; `#` starts a comment; edge order fixes the pair-basis order.
GraphPtr parse_graph_text(const std::string& text);
std::string serialize_graph(const LabeledGraph& g);

// .sgd: either `use <graph-file>` (resolved against base_dir) or an inline
// graph block, followed by `crossing <over> <opos> <under> <upos> <sign>`
// lines; ids are assigned in file order.
Diagram parse_diagram_text(const std::string& text, const std::string& base_dir);
std::string serialize_diagram(const Diagram& d);

// .eps.txt: `epsilon <graph-name>` then `<label> <label> <value>` lines;
// omitted pairs are zero; adjacent pairs are rejected.
EpsilonTable parse_epsilon_text(const std::string& text, GraphPtr g);
std::string serialize_epsilon(const EpsilonTable& t);

// Whole-file or stdin ("-") reader.
std::string read_text_file(const std::string& path);

}  // namespace sgi
