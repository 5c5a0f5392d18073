// Parsers and serializers for the graph, diagram, and pair-table formats.
#include "sgi/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace sgi {

namespace {

// Lines stripped of comments and blank lines, then split on whitespace.
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("bad " + what + ": " + s);
    }
}

GraphPtr graph_from_lines(const std::vector<std::vector<std::string>>& lines, size_t from,
                          size_t to) {
    std::string name;
    std::vector<std::string> verts;
    std::vector<std::array<std::string, 3>> edges;
    for (size_t i = from; i < to; ++i) {
        const auto& t = lines[i];
        if (t[0] == "graph") {
            if (t.size() != 2) throw DomainError("graph line needs a name");
            if (!name.empty()) throw DomainError("second graph line in one block");
            name = t[1];
        } else if (t[0] == "vertex") {
            if (t.size() != 2) throw DomainError("vertex line needs an id");
            verts.push_back(t[1]);
        } else if (t[0] == "edge") {
            if (t.size() != 4) throw DomainError("edge line needs label, tail, head");
            edges.push_back({t[1], t[2], t[3]});
        } else {
            throw DomainError("unexpected line in graph block: " + t[0]);
        }
    }
    if (name.empty()) throw DomainError("missing graph line");
    return std::make_shared<const LabeledGraph>(LabeledGraph::make(name, verts, edges));
}

}  // namespace

GraphPtr parse_graph_text(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw DomainError("empty graph file");
    return graph_from_lines(lines, 0, lines.size());
}

std::string serialize_graph(const LabeledGraph& g) {
    std::ostringstream out;
    out << "graph " << g.name() << "\n";
    for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
    for (const auto& e : g.edges())
        out << "edge " << e.label << " " << g.vertices()[e.tail] << " " << g.vertices()[e.head]
            << "\n";
    return out.str();
}

Diagram parse_diagram_text(const std::string& text, const std::string& base_dir) {
    auto lines = tokenize(text);
    if (lines.empty()) throw DomainError("empty diagram file");
    GraphPtr g;
    size_t graph_begin = lines.size(), graph_end = lines.size();
    std::vector<size_t> crossing_lines;
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t[0] == "use") {
            if (t.size() != 2) throw DomainError("use line needs a file path");
            if (g || graph_begin < lines.size())
                throw DomainError("diagram has both use and an inline graph");
            std::string path = t[1];
            if (!path.empty() && path[0] != '/' && !base_dir.empty())
                path = base_dir + "/" + path;
            g = parse_graph_text(read_text_file(path));
        } else if (t[0] == "graph" || t[0] == "vertex" || t[0] == "edge") {
            if (g) throw DomainError("diagram has both use and an inline graph");
            if (graph_begin == lines.size()) graph_begin = i;
            graph_end = i + 1;
            if (t[0] == "graph" && graph_begin != i)
                throw DomainError("graph line must open the inline graph block");
        } else if (t[0] == "crossing") {
            crossing_lines.push_back(i);
        } else {
            throw DomainError("unexpected line in diagram file: " + t[0]);
        }
    }
    if (!g) {
        if (graph_begin == lines.size()) throw DomainError("diagram specifies no graph");
        g = graph_from_lines(lines, graph_begin, graph_end);
    }
    Diagram d = Diagram::empty(g);
    for (size_t i : crossing_lines) {
        const auto& t = lines[i];
        if (t.size() != 6)
            throw DomainError("crossing line needs over, over-pos, under, under-pos, sign");
        int oe = g->edge_index_checked(t[1]);
        int ue = g->edge_index_checked(t[3]);
        long long op = parse_int(t[2], "position");
        long long up = parse_int(t[4], "position");
        long long s = parse_int(t[5], "sign");
        if (s != 1 && s != -1) throw DomainError("crossing sign must be +1 or -1");
        d.add_crossing(oe, op, ue, up, static_cast<int>(s));
    }
    d.validate();
    return d;
}

std::string serialize_diagram(const Diagram& d) {
    std::ostringstream out;
    out << serialize_graph(*d.graph);
    for (const auto& c : d.crossings)
        out << "crossing " << d.graph->edge(c.over_edge).label << " " << c.over_pos << " "
            << d.graph->edge(c.under_edge).label << " " << c.under_pos << " "
            << (c.sign > 0 ? "1" : "-1") << "\n";
    return out.str();
}

EpsilonTable parse_epsilon_text(const std::string& text, GraphPtr g) {
    auto lines = tokenize(text);
    if (lines.empty()) throw DomainError("empty table file");
    if (lines[0][0] != "epsilon" || lines[0].size() != 2)
        throw DomainError("table file must open with: epsilon <graph-name>");
    if (lines[0][1] != g->name())
        throw DomainError("table is for graph " + lines[0][1] + ", not " + g->name());
    EpsilonTable t = zero_table(g, "file");
    std::vector<char> seen(g->pair_count(), 0);
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& tk = lines[i];
        if (tk.size() != 3) throw DomainError("table line needs two labels and a value");
        int k = g->pair_index(tk[0], tk[1]);
        if (k < 0) {
            if (g->edge_index(tk[0]) < 0) throw DomainError("unknown edge label: " + tk[0]);
            if (g->edge_index(tk[1]) < 0) throw DomainError("unknown edge label: " + tk[1]);
            throw DomainError("edges " + tk[0] + " and " + tk[1] + " are not disjoint");
        }
        if (seen[k]) throw DomainError("pair assigned twice: " + tk[0] + " " + tk[1]);
        seen[k] = 1;
        t.vals[k] = parse_int(tk[2], "table value");
    }
    return t;
}

std::string serialize_epsilon(const EpsilonTable& t) {
    std::ostringstream out;
    out << "epsilon " << t.graph->name() << "\n";
    for (int k = 0; k < t.graph->pair_count(); ++k) {
        if (t.vals[k] == 0) continue;
        auto [a, b] = t.graph->pair_labels(k);
        out << a << " " << b << " " << t.vals[k] << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace sgi
