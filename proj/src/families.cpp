// Builders for the canonical families, the curated pattern-subgraph lists,
// and rung deletion with smoothing on even Mobius ladders.
#include "sgi/families.hpp"

#include <array>
#include <memory>

namespace sgi {

namespace {

// 1-based cyclic index into 1..m.
int cyc(int k, int m) { return ((k - 1) % m + m) % m + 1; }

std::string lab(const std::string& base, int i) { return base + std::to_string(i); }

LabeledGraph make_2k3() {
    std::vector<std::string> vs = {"a1", "a2", "a3", "b1", "b2", "b3"};
    std::vector<std::array<std::string, 3>> es;
    for (int i = 1; i <= 3; ++i) es.push_back({lab("e", i), lab("a", i), lab("a", cyc(i + 1, 3))});
    for (int i = 1; i <= 3; ++i) es.push_back({lab("d", i), lab("b", i), lab("b", cyc(i + 1, 3))});
    return LabeledGraph::make("2K3", vs, es);
}

LabeledGraph make_k5() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 5; ++i) vs.push_back(lab("p", i));
    std::vector<std::array<std::string, 3>> es;
    for (int i = 1; i <= 5; ++i) es.push_back({lab("e", i), lab("p", i), lab("p", cyc(i + 1, 5))});
    for (int i = 1; i <= 5; ++i) es.push_back({lab("d", i), lab("p", i), lab("p", cyc(i + 2, 5))});
    return LabeledGraph::make("K5", vs, es);
}

LabeledGraph make_k33() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 6; ++i) vs.push_back(lab("h", i));
    std::vector<std::array<std::string, 3>> es;
    for (int i = 1; i <= 6; ++i) es.push_back({lab("c", i), lab("h", i), lab("h", cyc(i + 1, 6))});
    es.push_back({"b1", "h1", "h4"});
    es.push_back({"b2", "h5", "h2"});
    es.push_back({"b3", "h3", "h6"});
    return LabeledGraph::make("K33", vs, es);
}

LabeledGraph make_k6() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 6; ++i) vs.push_back(lab("w", i));
    std::vector<std::array<std::string, 3>> es;
    for (int i = 1; i <= 6; ++i) es.push_back({lab("x", i), lab("w", i), lab("w", cyc(i + 1, 6))});
    for (int i = 1; i <= 6; ++i) es.push_back({lab("y", i), lab("w", i), lab("w", cyc(i + 2, 6))});
    es.push_back({"z1", "w1", "w4"});
    es.push_back({"z2", "w5", "w2"});
    es.push_back({"z3", "w3", "w6"});
    return LabeledGraph::make("K6", vs, es);
}

LabeledGraph make_k7() {
    std::vector<std::string> vs;
    for (int i = 0; i <= 6; ++i) vs.push_back(lab("v", i));
    auto v7 = [&](int k) { return lab("v", ((k % 7) + 7) % 7); };
    std::vector<std::array<std::string, 3>> es;
    for (int i = 1; i <= 7; ++i) es.push_back({lab("x", i), v7(i - 1), v7(i)});
    for (int i = 1; i <= 7; ++i) es.push_back({lab("y", i), v7(i - 1), v7(i + 1)});
    for (int i = 1; i <= 7; ++i) es.push_back({lab("z", i), v7(i - 1), v7(i + 2)});
    return LabeledGraph::make("K7", vs, es);
}

LabeledGraph make_mobius(int n) {
    if (n < 3) throw DomainError("Mobius ladder requires n >= 3");
    const int m = 2 * n;
    std::vector<std::string> vs;
    for (int i = 1; i <= m; ++i) vs.push_back(lab("u", i));
    std::vector<std::array<std::string, 3>> es;
    for (int i = 1; i <= m; ++i) {
        std::string a = lab("u", i), b = lab("u", cyc(i + 1, m));
        if (i % 2 == 1)
            es.push_back({lab("x", i), a, b});
        else
            es.push_back({lab("x", i), b, a});
    }
    for (int i = 1; i <= n; ++i) {
        int f1 = i, f2 = i + n;
        if (n % 2 == 1) {
            // one foot is even-indexed; orient from it toward the odd one
            int even_foot = (f1 % 2 == 0) ? f1 : f2;
            int odd_foot = (f1 % 2 == 0) ? f2 : f1;
            es.push_back({lab("y", i), lab("u", even_foot), lab("u", odd_foot)});
        } else {
            es.push_back({lab("y", i), lab("u", f1), lab("u", f2)});
        }
    }
    return LabeledGraph::make("M" + std::to_string(n), vs, es);
}

LabeledGraph make_heawood() {
    std::vector<std::string> vs;
    for (int i = 1; i <= 14; ++i) vs.push_back(lab("u", i));
    std::vector<std::array<std::string, 3>> es;
    for (int i = 1; i <= 14; ++i) {
        std::string a = lab("u", i), b = lab("u", cyc(i + 1, 14));
        if (i % 2 == 1)
            es.push_back({lab("x", i), a, b});
        else
            es.push_back({lab("x", i), b, a});
    }
    for (int j = 1; j <= 7; ++j) {
        int f1 = 2 * j - 1;          // odd foot
        int f2 = cyc(2 * j + 4, 14); // even foot
        es.push_back({lab("y", j), lab("u", f2), lab("u", f1)});
    }
    return LabeledGraph::make("Heawood", vs, es);
}

// Pattern built from a literal list of host edges: inherits labels,
// endpoints, and directions; every direction factor is +1.
SubgraphEmbedding literal_embedding(GraphPtr host, const std::vector<std::string>& edge_labels,
                                    const std::string& tag, const std::string& pin_a,
                                    const std::string& pin_b) {
    std::vector<int> keep;
    for (const auto& l : edge_labels) keep.push_back(host->edge_index_checked(l));
    std::vector<std::string> pvs;
    std::vector<char> vused(host->vertex_count(), 0);
    for (int e : keep) {
        vused[host->edge(e).tail] = 1;
        vused[host->edge(e).head] = 1;
    }
    for (int v = 0; v < host->vertex_count(); ++v)
        if (vused[v]) pvs.push_back(host->vertices()[v]);
    std::vector<std::array<std::string, 3>> pes;
    for (int e : keep) {
        const Edge& ed = host->edge(e);
        pes.push_back({ed.label, host->vertices()[ed.tail], host->vertices()[ed.head]});
    }
    auto pat = std::make_shared<const LabeledGraph>(LabeledGraph::make(tag, pvs, pes));
    SubgraphEmbedding emb;
    emb.host = host;
    emb.pattern = pat;
    emb.tag = tag;
    emb.pin_a = pin_a;
    emb.pin_b = pin_b;
    emb.edge_img.assign(host->edge_count(), -1);
    emb.edge_dir.assign(host->edge_count(), +1);
    emb.path_pos.assign(host->edge_count(), 0);
    emb.vert_img.assign(host->vertex_count(), -1);
    for (int e : keep) emb.edge_img[e] = pat->edge_index(host->edge(e).label);
    for (int v = 0; v < host->vertex_count(); ++v)
        if (vused[v]) emb.vert_img[v] = pat->vertex_index(host->vertices()[v]);
    return emb;
}

// Pattern reached through a vertex correspondence: host edges with both
// endpoints mapped go to the unique pattern edge joining the image vertices.
SubgraphEmbedding vertex_map_embedding(GraphPtr host, GraphPtr pattern,
                                       const std::vector<std::pair<std::string, std::string>>& vmap,
                                       const std::string& tag) {
    SubgraphEmbedding emb;
    emb.host = host;
    emb.pattern = pattern;
    emb.tag = tag;
    emb.edge_img.assign(host->edge_count(), -1);
    emb.edge_dir.assign(host->edge_count(), +1);
    emb.path_pos.assign(host->edge_count(), 0);
    emb.vert_img.assign(host->vertex_count(), -1);
    for (const auto& [hv, pv] : vmap) {
        int hi = host->vertex_index(hv);
        int pi = pattern->vertex_index(pv);
        if (hi < 0 || pi < 0) throw DomainError("bad vertex correspondence: " + hv + "->" + pv);
        emb.vert_img[hi] = pi;
    }
    for (int e = 0; e < host->edge_count(); ++e) {
        int a = emb.vert_img[host->edge(e).tail];
        int b = emb.vert_img[host->edge(e).head];
        if (a < 0 || b < 0) continue;
        for (int f = 0; f < pattern->edge_count(); ++f) {
            const Edge& pe = pattern->edge(f);
            if (pe.tail == a && pe.head == b) {
                emb.edge_img[e] = f;
                emb.edge_dir[e] = +1;
                break;
            }
            if (pe.tail == b && pe.head == a) {
                emb.edge_img[e] = f;
                emb.edge_dir[e] = -1;
                break;
            }
        }
        if (emb.edge_img[e] < 0)
            throw DomainError("vertex correspondence does not carry edge " + host->edge(e).label +
                              " to a pattern edge");
    }
    return emb;
}

}  // namespace

GraphPtr build_family(const std::string& family, int n) {
    if (family == "2K3") return std::make_shared<const LabeledGraph>(make_2k3());
    if (family == "K5") return std::make_shared<const LabeledGraph>(make_k5());
    if (family == "K33") return std::make_shared<const LabeledGraph>(make_k33());
    if (family == "K6") return std::make_shared<const LabeledGraph>(make_k6());
    if (family == "K7") return std::make_shared<const LabeledGraph>(make_k7());
    if (family == "Mobius") return std::make_shared<const LabeledGraph>(make_mobius(n));
    if (family == "Heawood") return std::make_shared<const LabeledGraph>(make_heawood());
    throw DomainError("unknown family: " + family +
                      " (expected 2K3, K5, K33, K6, K7, Mobius, Heawood)");
}

bool parse_mobius_name(const std::string& name, int* n_out) {
    if (name.size() < 2 || name[0] != 'M') return false;
    int n = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return false;
        n = n * 10 + (name[i] - '0');
    }
    if (n < 3) return false;
    if (n_out) *n_out = n;
    return true;
}

std::vector<SubgraphEmbedding> enumerate_pattern_subgraphs(GraphPtr host,
                                                           const std::string& pattern) {
    std::vector<SubgraphEmbedding> out;
    const std::string& hn = host->name();
    int mob_n = 0;
    if (hn == "K6" && pattern == "K5") {
        GraphPtr k5 = build_family("K5");
        for (int q = 1; q <= 6; ++q) {
            std::vector<std::pair<std::string, std::string>> vmap;
            for (int t = 1; t <= 5; ++t) vmap.push_back({lab("w", cyc(q + t, 6)), lab("p", t)});
            out.push_back(vertex_map_embedding(host, k5, vmap, "K5@" + std::to_string(q)));
        }
        return out;
    }
    if (hn == "K6" && pattern == "2K3") {
        GraphPtr g = build_family("2K3");
        std::vector<std::pair<std::string, std::string>> vmap = {
            {"w1", "a1"}, {"w3", "a2"}, {"w5", "a3"}, {"w2", "b1"}, {"w4", "b2"}, {"w6", "b3"}};
        out.push_back(vertex_map_embedding(host, g, vmap, "2K3@triangles"));
        return out;
    }
    if (hn == "K6" && pattern == "K33") {
        GraphPtr g = build_family("K33");
        std::vector<std::pair<std::string, std::string>> vmap;
        for (int i = 1; i <= 6; ++i) vmap.push_back({lab("w", i), lab("h", i)});
        out.push_back(vertex_map_embedding(host, g, vmap, "K33@rim"));
        return out;
    }
    if (hn == "K7" && pattern == "K33") {
        for (int q = 1; q <= 7; ++q) {
            std::vector<std::string> es;
            for (int i = 1; i <= 7; ++i) es.push_back(lab("x", i));
            for (int t = 1; t <= 3; ++t) es.push_back(lab("z", cyc(q + t, 7)));
            out.push_back(literal_embedding(host, es, "G" + std::to_string(q), "x1", "x4"));
        }
        for (int q = 1; q <= 7; ++q) {
            std::vector<std::string> es;
            for (int i = 1; i <= 7; ++i) es.push_back(lab("y", i));
            es.push_back(lab("x", q));
            es.push_back(lab("x", cyc(q + 2, 7)));
            es.push_back(lab("x", cyc(q + 4, 7)));
            out.push_back(literal_embedding(host, es, "H" + std::to_string(q), "y1", "y7"));
        }
        for (int q = 1; q <= 7; ++q) {
            std::vector<std::string> es;
            for (int i = 1; i <= 7; ++i) es.push_back(lab("z", i));
            es.push_back(lab("y", q));
            es.push_back(lab("y", cyc(q + 1, 7)));
            es.push_back(lab("y", cyc(q + 4, 7)));
            out.push_back(literal_embedding(host, es, "F" + std::to_string(q), "z1", "z3"));
        }
        return out;
    }
    if (hn == "K7" && pattern == "2K3") {
        for (int q = 1; q <= 7; ++q) {
            std::vector<std::string> es = {lab("x", cyc(q + 1, 7)), lab("y", cyc(q + 6, 7)),
                                           lab("z", cyc(q + 6, 7)), lab("x", cyc(q + 4, 7)),
                                           lab("y", cyc(q + 5, 7)), lab("z", cyc(q + 4, 7))};
            out.push_back(literal_embedding(host, es, "J" + std::to_string(q),
                                            lab("x", cyc(q + 1, 7)), lab("x", cyc(q + 4, 7))));
        }
        return out;
    }
    if (parse_mobius_name(hn, &mob_n) && pattern == "K33") {
        if (mob_n < 5 || mob_n % 2 == 0)
            throw DomainError("rim-plus-rungs subgraphs require an odd ladder M_n with n >= 5");
        const int n = mob_n;
        for (int q = 0; q < n; ++q) {
            std::vector<std::string> es;
            for (int i = 1; i <= 2 * n; ++i) es.push_back(lab("x", i));
            for (int t = 1; t <= 3; ++t) es.push_back(lab("y", cyc(q + t, n)));
            out.push_back(literal_embedding(host, es, "G" + std::to_string(q),
                                            lab("x", cyc(q + 1, 2 * n)),
                                            lab("x", cyc(q + n + 1, 2 * n))));
        }
        return out;
    }
    if (hn == "Heawood" && pattern == "K33") {
        for (int q = 0; q < 7; ++q) {
            std::vector<std::string> es;
            for (int i = 1; i <= 14; ++i) es.push_back(lab("x", i));
            for (int t = 1; t <= 3; ++t) es.push_back(lab("y", cyc(q + t, 7)));
            out.push_back(literal_embedding(host, es, "G" + std::to_string(q), "x1", "x8"));
        }
        return out;
    }
    throw DomainError("no curated pattern list for host " + hn + " and pattern " + pattern);
}

RungSurgery delete_rung_and_smooth(GraphPtr g, const std::string& rung_label) {
    const int E = g->edge_count();
    if (E % 3 != 0) throw DomainError("rung surgery requires a Mobius ladder");
    const int n = E / 3;
    if (n < 4 || n % 2 != 0)
        throw DomainError("rung surgery requires an even Mobius ladder M_n with n >= 4");
    GraphPtr canon = build_family("Mobius", n);
    if (!g->same_structure(*canon))
        throw DomainError("rung surgery requires the canonical even Mobius ladder");
    if (rung_label.empty() || rung_label[0] != 'y')
        throw DomainError("not a rung label: " + rung_label);
    int i = g->edge_index(rung_label) - 2 * n + 1;  // rungs follow the 2n outer edges
    if (i < 1 || i > n) throw DomainError("not a rung label: " + rung_label);

    const int m = 2 * n;        // host vertices
    const int mc = 2 * (n - 1); // child vertices
    GraphPtr child = build_family("Mobius", n - 1);

    SubgraphEmbedding emb;
    emb.host = g;
    emb.pattern = child;
    emb.tag = "smooth:" + rung_label;
    emb.edge_img.assign(E, -1);
    emb.edge_dir.assign(E, +1);
    emb.path_pos.assign(E, 0);
    emb.vert_img.assign(g->vertex_count(), -1);

    auto hvert = [&](int k) { return g->vertex_index(lab("u", cyc(k, m))); };
    auto cvert = [&](int k) { return child->vertex_index(lab("u", cyc(k, mc))); };
    auto hedge_x = [&](int k) { return g->edge_index(lab("x", cyc(k, m))); };
    auto cedge_x = [&](int k) { return child->edge_index(lab("x", cyc(k, mc))); };

    for (int t = 1; t <= n - 1; ++t) emb.vert_img[hvert(i + t)] = cvert(t);
    for (int t = n; t <= 2 * n - 2; ++t) emb.vert_img[hvert(i + t + 1)] = cvert(t);

    // Outer edges away from the smoothed vertices map one-to-one.
    for (int t = 1; t <= n - 2; ++t) emb.edge_img[hedge_x(i + t)] = cedge_x(t);
    for (int t = n; t <= 2 * n - 3; ++t) emb.edge_img[hedge_x(i + t + 1)] = cedge_x(t);
    // Two child outer edges are smoothed two-edge paths.
    emb.edge_img[hedge_x(i + n - 1)] = cedge_x(n - 1);
    emb.path_pos[hedge_x(i + n - 1)] = 0;
    emb.edge_img[hedge_x(i + n)] = cedge_x(n - 1);
    emb.path_pos[hedge_x(i + n)] = 1;
    emb.edge_img[hedge_x(i)] = cedge_x(2 * n - 2);
    emb.path_pos[hedge_x(i)] = 0;
    emb.edge_img[hedge_x(i - 1)] = cedge_x(2 * n - 2);
    emb.path_pos[hedge_x(i - 1)] = 1;
    // Remaining rungs shift cyclically past the deleted one.
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        int t = ((j - i) % n + n) % n;  // 1..n-1
        emb.edge_img[g->edge_index(lab("y", j))] = child->edge_index(lab("y", t));
    }

    // Direction factors by endpoint comparison; smoothed paths compare the
    // endpoint that survives into the child.
    for (int e = 0; e < E; ++e) {
        int f = emb.edge_img[e];
        if (f < 0) continue;
        const Edge& he = g->edge(e);
        const Edge& ce = child->edge(f);
        int a = emb.vert_img[he.tail];
        int b = emb.vert_img[he.head];
        if (a >= 0 && b >= 0) {
            if (a == ce.tail && b == ce.head)
                emb.edge_dir[e] = +1;
            else if (a == ce.head && b == ce.tail)
                emb.edge_dir[e] = -1;
            else
                throw DomainError("internal: rung surgery produced an inconsistent edge map");
        } else if (a >= 0) {
            // Host tail survives: along the host edge we leave `a`, so the
            // traversal agrees with the child edge exactly when `a` is the
            // child tail (path start) -- per-position the child edge is
            // entered at its tail and left at its head.
            emb.edge_dir[e] = (a == ce.tail) ? +1 : -1;
        } else if (b >= 0) {
            emb.edge_dir[e] = (b == ce.head) ? +1 : -1;
        } else {
            throw DomainError("internal: rung surgery lost both endpoints of a mapped edge");
        }
    }

    return RungSurgery{child, emb};
}

}  // namespace sgi
