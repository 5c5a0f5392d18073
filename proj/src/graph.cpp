// Implementation of the labeled-graph core: construction/validation, the
// disjoint-pair basis, automorphism backtracking, and rung surgery.
#include "sgi/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sgi {

LabeledGraph LabeledGraph::make(std::string name, std::vector<std::string> vertex_ids,
                                std::vector<std::array<std::string, 3>> edge_specs) {
    LabeledGraph g;
    g.name_ = std::move(name);
    g.verts_ = std::move(vertex_ids);
    std::set<std::string> seen_v;
    for (const auto& v : g.verts_) {
        if (v.empty()) throw DomainError("empty vertex id");
        if (!seen_v.insert(v).second) throw DomainError("duplicate vertex id: " + v);
    }
    std::set<std::string> seen_e;
    for (const auto& spec : edge_specs) {
        const auto& [label, tail, head] = spec;
        if (label.empty()) throw DomainError("empty edge label");
        if (!seen_e.insert(label).second) throw DomainError("duplicate edge label: " + label);
        int t = g.vertex_index(tail);
        int h = g.vertex_index(head);
        if (t < 0) throw DomainError("edge " + label + ": unknown vertex " + tail);
        if (h < 0) throw DomainError("edge " + label + ": unknown vertex " + head);
        if (t == h) throw DomainError("edge " + label + ": self-loop at " + tail);
        g.edges_.push_back(Edge{label, t, h});
    }
    const int E = g.edge_count();
    g.pair_idx_.assign(static_cast<size_t>(E) * E, -1);
    for (int a = 0; a < E; ++a) {
        for (int b = a + 1; b < E; ++b) {
            if (g.edges_adjacent(a, b)) continue;
            int k = static_cast<int>(g.pairs_.size());
            g.pairs_.emplace_back(a, b);
            g.pair_idx_[static_cast<size_t>(a) * E + b] = k;
            g.pair_idx_[static_cast<size_t>(b) * E + a] = k;
        }
    }
    return g;
}

int LabeledGraph::vertex_index(const std::string& id) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (verts_[i] == id) return i;
    return -1;
}

int LabeledGraph::edge_index(const std::string& label) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].label == label) return i;
    return -1;
}

int LabeledGraph::edge_index_checked(const std::string& label) const {
    int i = edge_index(label);
    if (i < 0) throw DomainError("unknown edge label: " + label);
    return i;
}

bool LabeledGraph::edges_adjacent(int a, int b) const {
    if (a == b) return true;
    const Edge& ea = edges_.at(a);
    const Edge& eb = edges_.at(b);
    return ea.tail == eb.tail || ea.tail == eb.head || ea.head == eb.tail || ea.head == eb.head;
}

bool LabeledGraph::incident(int e, int v) const {
    const Edge& ed = edges_.at(e);
    return ed.tail == v || ed.head == v;
}

int LabeledGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.tail == v || e.head == v) ++d;
    return d;
}

int LabeledGraph::component_count() const {
    const int V = vertex_count();
    std::vector<int> root(V);
    for (int i = 0; i < V; ++i) root[i] = i;
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& e : edges_) root[find(e.tail)] = find(e.head);
    int c = 0;
    for (int i = 0; i < V; ++i)
        if (find(i) == i) ++c;
    return c;
}

int LabeledGraph::beta1() const { return edge_count() - vertex_count() + component_count(); }

int LabeledGraph::pair_index(int a, int b) const {
    const int E = edge_count();
    if (a < 0 || b < 0 || a >= E || b >= E) return -1;
    return pair_idx_[static_cast<size_t>(a) * E + b];
}

int LabeledGraph::pair_index(const std::string& a, const std::string& b) const {
    return pair_index(edge_index(a), edge_index(b));
}

std::pair<std::string, std::string> LabeledGraph::pair_labels(int k) const {
    const auto& [a, b] = pairs_.at(k);
    return {edges_[a].label, edges_[b].label};
}

bool LabeledGraph::same_structure(const LabeledGraph& o) const {
    if (verts_ != o.verts_) return false;
    if (edge_count() != o.edge_count()) return false;
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = o.edges_[i];
        if (a.label != b.label || a.tail != b.tail || a.head != b.head) return false;
    }
    return true;
}

const char* to_string(Character c) {
    switch (c) {
        case Character::AllPreserved: return "all-preserved";
        case Character::AllReversed: return "all-reversed";
        default: return "mixed";
    }
}

namespace {

// Edge-multiplicity between an (unordered) vertex pair.
int edge_mult(const LabeledGraph& g, int u, int v) {
    int m = 0;
    for (const auto& e : g.edges())
        if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) ++m;
    return m;
}

void extend(const LabeledGraph& g, std::vector<int>& vperm, std::vector<char>& used, int next,
            const std::vector<int>* constraint, std::vector<Automorphism>& out) {
    const int V = g.vertex_count();
    if (next == V) {
        Automorphism a;
        a.vperm = vperm;
        a.emap.assign(g.edge_count(), -1);
        a.edir.assign(g.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            int t = vperm[g.edge(e).tail];
            int h = vperm[g.edge(e).head];
            for (int f = 0; f < g.edge_count(); ++f) {
                const Edge& im = g.edge(f);
                if (im.tail == t && im.head == h) {
                    a.emap[e] = f;
                    a.edir[e] = +1;
                    break;
                }
                if (im.tail == h && im.head == t) {
                    a.emap[e] = f;
                    a.edir[e] = -1;
                    break;
                }
            }
            if (a.emap[e] < 0) return;  // vertex map does not induce an edge map
        }
        if (constraint) {
            for (int e : *constraint) {
                if (std::find(constraint->begin(), constraint->end(), a.emap[e]) ==
                    constraint->end())
                    return;
            }
        }
        out.push_back(std::move(a));
        return;
    }
    for (int img = 0; img < V; ++img) {
        if (used[img]) continue;
        if (g.degree(img) != g.degree(next)) continue;
        bool ok = true;
        for (int w = 0; w < next && ok; ++w)
            if (edge_mult(g, next, w) != edge_mult(g, img, vperm[w])) ok = false;
        if (!ok) continue;
        vperm[next] = img;
        used[img] = 1;
        extend(g, vperm, used, next + 1, constraint, out);
        used[img] = 0;
        vperm[next] = -1;
    }
}

}  // namespace

std::vector<Automorphism> automorphisms(const LabeledGraph& g, const std::vector<int>* constraint) {
    if (g.vertex_count() > 20)
        throw DomainError("automorphism search limited to graphs with at most 20 vertices");
    for (int a = 0; a < g.edge_count(); ++a)
        for (int b = a + 1; b < g.edge_count(); ++b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            bool same = (ea.tail == eb.tail && ea.head == eb.head) ||
                        (ea.tail == eb.head && ea.head == eb.tail);
            if (same) throw DomainError("automorphism search requires no parallel edges");
        }
    std::vector<int> vperm(g.vertex_count(), -1);
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<Automorphism> out;
    extend(g, vperm, used, 0, constraint, out);
    return out;
}

Character orientation_character(const LabeledGraph& g, const Automorphism& a,
                                const std::vector<int>& edge_subset) {
    for (int e : edge_subset)
        if (std::find(edge_subset.begin(), edge_subset.end(), a.emap.at(e)) == edge_subset.end())
            throw DomainError("edge subset is not invariant under the automorphism");
    bool any_plus = false, any_minus = false;
    for (int e : edge_subset) {
        if (a.edir.at(e) > 0)
            any_plus = true;
        else
            any_minus = true;
    }
    if (any_plus && any_minus) return Character::Mixed;
    return any_minus ? Character::AllReversed : Character::AllPreserved;
}

Automorphism compose(const LabeledGraph& g, const Automorphism& f, const Automorphism& s) {
    Automorphism r;
    r.vperm.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) r.vperm[v] = f.vperm.at(s.vperm.at(v));
    r.emap.resize(g.edge_count());
    r.edir.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        r.emap[e] = f.emap.at(s.emap.at(e));
        r.edir[e] = s.edir.at(e) * f.edir.at(s.emap.at(e));
    }
    return r;
}

SubgraphEmbedding SubgraphEmbedding::identity(GraphPtr g) {
    SubgraphEmbedding e;
    e.host = g;
    e.pattern = g;
    e.tag = "id";
    const int E = g->edge_count();
    e.edge_img.resize(E);
    e.edge_dir.assign(E, +1);
    e.path_pos.assign(E, 0);
    for (int i = 0; i < E; ++i) e.edge_img[i] = i;
    e.vert_img.resize(g->vertex_count());
    for (int v = 0; v < g->vertex_count(); ++v) e.vert_img[v] = v;
    return e;
}

}  // namespace sgi
