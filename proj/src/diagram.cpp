// Diagram storage, validation, mirroring, restriction, and linking numbers.
#include "sgi/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sgi {

Diagram Diagram::empty(GraphPtr g) {
    Diagram d;
    d.graph = std::move(g);
    return d;
}

void Diagram::validate() const {
    std::set<int> ids;
    std::map<int, std::set<long long>> occupied;
    for (const auto& c : crossings) {
        if (c.sign != 1 && c.sign != -1) throw DomainError("crossing sign must be +1 or -1");
        if (c.over_edge < 0 || c.over_edge >= graph->edge_count() || c.under_edge < 0 ||
            c.under_edge >= graph->edge_count())
            throw DomainError("crossing references an edge outside the graph");
        if (!ids.insert(c.id).second) throw DomainError("duplicate crossing id");
        if (!occupied[c.over_edge].insert(c.over_pos).second)
            throw DomainError("two crossing sides share a position on edge " +
                              graph->edge(c.over_edge).label);
        if (!occupied[c.under_edge].insert(c.under_pos).second)
            throw DomainError("two crossing sides share a position on edge " +
                              graph->edge(c.under_edge).label);
    }
}

int Diagram::find_index(int id) const {
    for (size_t i = 0; i < crossings.size(); ++i)
        if (crossings[i].id == id) return static_cast<int>(i);
    return -1;
}

const Crossing& Diagram::by_id(int id) const {
    int i = find_index(id);
    if (i < 0) throw DomainError("no crossing with id " + std::to_string(id));
    return crossings[i];
}

std::vector<StrandSide> Diagram::strand(int edge) const {
    std::vector<StrandSide> out;
    for (size_t i = 0; i < crossings.size(); ++i) {
        if (crossings[i].over_edge == edge)
            out.push_back({crossings[i].over_pos, static_cast<int>(i), true});
        if (crossings[i].under_edge == edge)
            out.push_back({crossings[i].under_pos, static_cast<int>(i), false});
    }
    std::sort(out.begin(), out.end(),
              [](const StrandSide& a, const StrandSide& b) { return a.pos < b.pos; });
    return out;
}

int Diagram::add_crossing(int over_e, long long opos, int under_e, long long upos, int sign) {
    Crossing c;
    c.id = next_id++;
    c.over_edge = over_e;
    c.over_pos = opos;
    c.under_edge = under_e;
    c.under_pos = upos;
    c.sign = sign;
    crossings.push_back(c);
    return c.id;
}

void Diagram::remove_id(int id) {
    int i = find_index(id);
    if (i < 0) throw DomainError("no crossing with id " + std::to_string(id));
    crossings.erase(crossings.begin() + i);
}

Vec pairwise_linking(const Diagram& d) {
    Vec v(d.graph->pair_count(), 0);
    for (const auto& c : d.crossings) {
        int k = d.graph->pair_index(c.over_edge, c.under_edge);
        if (k >= 0) v[k] += c.sign;
    }
    return v;
}

Diagram mirror_diagram(const Diagram& d) {
    Diagram m = d;
    for (auto& c : m.crossings) {
        std::swap(c.over_edge, c.under_edge);
        std::swap(c.over_pos, c.under_pos);
        c.sign = -c.sign;
    }
    return m;
}

Diagram restrict_diagram(const Diagram& d, const SubgraphEmbedding& emb) {
    if (!d.graph->same_structure(*emb.host))
        throw DomainError("diagram graph does not match the embedding host");
    Diagram out = Diagram::empty(emb.pattern);
    struct PendingSide {
        int new_cidx;
        bool over;
        int host_edge;
        long long host_pos;
    };
    std::map<int, std::vector<PendingSide>> per_pattern_edge;
    for (const auto& c : d.crossings) {
        int A = emb.edge_img[c.over_edge];
        int B = emb.edge_img[c.under_edge];
        if (A < 0 || B < 0) continue;
        Crossing nc;
        nc.id = out.next_id++;
        nc.over_edge = A;
        nc.under_edge = B;
        nc.sign = c.sign * emb.edge_dir[c.over_edge] * emb.edge_dir[c.under_edge];
        int idx = static_cast<int>(out.crossings.size());
        out.crossings.push_back(nc);
        per_pattern_edge[A].push_back({idx, true, c.over_edge, c.over_pos});
        per_pattern_edge[B].push_back({idx, false, c.under_edge, c.under_pos});
    }
    for (auto& [pe, sides] : per_pattern_edge) {
        std::sort(sides.begin(), sides.end(), [&](const PendingSide& a, const PendingSide& b) {
            int pa = emb.path_pos[a.host_edge];
            int pb = emb.path_pos[b.host_edge];
            if (pa != pb) return pa < pb;
            long long ka = emb.edge_dir[a.host_edge] > 0 ? a.host_pos : -a.host_pos;
            long long kb = emb.edge_dir[b.host_edge] > 0 ? b.host_pos : -b.host_pos;
            if (a.host_edge != b.host_edge)
                throw DomainError("internal: distinct host edges share a path position");
            return ka < kb;
        });
        for (size_t t = 0; t < sides.size(); ++t) {
            Crossing& c = out.crossings[sides[t].new_cidx];
            if (sides[t].over)
                c.over_pos = 16LL * static_cast<long long>(t);
            else
                c.under_pos = 16LL * static_cast<long long>(t);
        }
    }
    out.validate();
    return out;
}

namespace {

// The labels must trace a single closed cycle; returns its vertex set.
std::set<int> cycle_vertices(const LabeledGraph& g, const std::vector<std::string>& labels) {
    if (labels.empty()) throw DomainError("empty edge list is not a cycle");
    std::set<int> edges;
    for (const auto& l : labels) edges.insert(g.edge_index_checked(l));
    if (edges.size() != labels.size()) throw DomainError("repeated edge in cycle");
    std::map<int, int> deg;
    for (int e : edges) {
        deg[g.edge(e).tail]++;
        deg[g.edge(e).head]++;
    }
    for (const auto& [v, dg] : deg)
        if (dg != 2) throw DomainError("edge list is not a cycle: vertex " + g.vertices()[v] +
                                       " has degree " + std::to_string(dg) + " in it");
    // Connectivity of the cycle's edges.
    std::set<int> seen;
    std::vector<int> stack = {g.edge(*edges.begin()).tail};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (int e : edges) {
            if (g.edge(e).tail == v) stack.push_back(g.edge(e).head);
            if (g.edge(e).head == v) stack.push_back(g.edge(e).tail);
        }
    }
    if (seen.size() != deg.size()) throw DomainError("edge list is not a single cycle");
    return seen;
}

}  // namespace

Int linking_number(const Diagram& d, const std::vector<std::string>& cycle_a,
                   const std::vector<std::string>& cycle_b) {
    const LabeledGraph& g = *d.graph;
    std::set<int> va = cycle_vertices(g, cycle_a);
    std::set<int> vb = cycle_vertices(g, cycle_b);
    for (int v : va)
        if (vb.count(v)) throw DomainError("cycles are not vertex-disjoint");
    std::set<int> ea, eb;
    for (const auto& l : cycle_a) ea.insert(g.edge_index_checked(l));
    for (const auto& l : cycle_b) eb.insert(g.edge_index_checked(l));
    Int total = 0;
    for (const auto& c : d.crossings) {
        bool oa = ea.count(c.over_edge), ob = eb.count(c.over_edge);
        bool ua = ea.count(c.under_edge), ub = eb.count(c.under_edge);
        if ((oa && ub) || (ob && ua)) total += c.sign;
    }
    if (total % 2 != 0)
        throw DomainError("signed crossing count between the cycles is odd; "
                          "the linking number is not integral");
    return total / 2;
}

}  // namespace sgi
