// Built-in pair tables, homomorphism checks, constrained solving, pullbacks,
// and minimal-multiplier integer decomposition.
#include "sgi/epsilon.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace sgi {

namespace {

int cyc(int k, int m) { return ((k - 1) % m + m) % m + 1; }

// Split "x12" into ('x', 12).
std::pair<char, int> split_label(const std::string& l) {
    if (l.size() < 2 || !std::isalpha(static_cast<unsigned char>(l[0])))
        throw DomainError("unexpected edge label: " + l);
    int idx = 0;
    for (size_t i = 1; i < l.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(l[i])))
            throw DomainError("unexpected edge label: " + l);
        idx = idx * 10 + (l[i] - '0');
    }
    return {l[0], idx};
}

int cyc_vdist(int a, int b, int m) {
    int d = ((a - b) % m + m) % m;
    return std::min(d, m - d);
}

int set_dist(const std::vector<int>& A, const std::vector<int>& B, int m) {
    int best = m;
    for (int a : A)
        for (int b : B) best = std::min(best, cyc_vdist(a, b, m));
    return best;
}

// Circular separation of two rim-edge indices, shifted so that touching
// edges sit at distance zero.
int outer_dist(int i, int j, int m) {
    int d = std::abs(i - j) % m;
    return std::min(d, m - d) - 1;
}

long long val_k5(char fa, char fb) {
    if (fa == 'e' && fb == 'e') return 1;
    return -1;  // d-d and mixed pairs
}

long long val_k33(char fa, int ia, char fb, int ib) {
    if (fa == fb) return 1;  // c-c and b-b
    int ci = (fa == 'c') ? ia : ib;
    return (ci % 2 == 1) ? -1 : 1;
}

long long val_k7(char fa, char fb) {
    if ((fa == 'x' && fb == 'y') || (fa == 'y' && fb == 'x')) return -1;
    return 1;
}

long long val_k6_ex27(char fa, int ia, char fb, int ib) {
    if (fa > fb) {
        std::swap(fa, fb);
        std::swap(ia, ib);
    }
    if (fa == 'x' && fb == 'x') return (cyc_vdist(ia, ib, 6) == 3) ? 3 : 2;
    if (fa == 'x' && fb == 'y') return -1;
    if (fa == 'x' && fb == 'z') return (ia % 2 == 1) ? -1 : 1;
    if (fa == 'y' && fb == 'y') return (cyc_vdist(ia, ib, 6) == 1) ? -1 : 0;
    if (fa == 'y' && fb == 'z') return 0;
    return 1;  // z-z
}

long long val_k6_sec5(char fa, int ia, char fb, int ib) {
    if (fa > fb) {
        std::swap(fa, fb);
        std::swap(ia, ib);
    }
    if (fa == 'x' && fb == 'x') return 1;
    if (fa == 'x' && fb == 'y') return 0;
    if (fa == 'x' && fb == 'z') return (ia % 2 == 1) ? -1 : 1;
    if (fa == 'y' && fb == 'y') return -1;
    if (fa == 'y' && fb == 'z') return 0;
    return 1;  // z-z
}

long long val_mobius(int n, char fa, int ia, char fb, int ib) {
    const int N = (n - 1) / 2;
    const int m = 2 * n;
    if (fa > fb) {
        std::swap(fa, fb);
        std::swap(ia, ib);
    }
    if (fa == 'x' && fb == 'x') {
        int d = outer_dist(ia, ib, m);
        if (d == 2 * N) return -1;
        if (d % 2 == 1 && d != 2 * N - 1) return 2;
        return 1;
    }
    if (fa == 'y' && fb == 'y') {
        int d = set_dist({ia, ia + n}, {ib, ib + n}, m);
        if (d == 1) return 2;
        if (d == 2) return 5;
        return 6;
    }
    // x-y
    int d = set_dist({ia, cyc(ia + 1, m)}, {ib, ib + n}, m);
    return (d == 1) ? 2 : 3;
}

std::vector<int> hea_feet(int j) { return {2 * j - 1, cyc(2 * j + 4, 14)}; }

bool hea_connected(int i, int j) {
    for (int c = 1; c <= 7; ++c) {
        auto f = hea_feet(c);
        for (int s = 0; s < 2; ++s) {
            int a = f[s], b = f[1 - s];
            bool a_in = (a == i || a == cyc(i + 1, 14));
            bool b_in = (b == j || b == cyc(j + 1, 14));
            if (a_in && b_in) return true;
        }
    }
    return false;
}

long long val_heawood(char fa, int ia, char fb, int ib) {
    if (fa > fb) {
        std::swap(fa, fb);
        std::swap(ia, ib);
    }
    if (fa == 'x' && fb == 'x') {
        int d = outer_dist(ia, ib, 14);
        if ((d == 3 || d == 5) && hea_connected(ia, ib)) return -2;
        if (d == 5) return -3;
        if (d == 6) return 5;
        if (d == 1 || d == 4) return 2;
        return 1;
    }
    if (fa == 'y' && fb == 'y') {
        int d = set_dist(hea_feet(ia), hea_feet(ib), 14);
        if (d == 1) return 2;
        if (d == 2) return 5;
        throw DomainError("internal: unexpected chord separation");
    }
    int d = set_dist({ia, cyc(ia + 1, 14)}, hea_feet(ib), 14);
    if (d == 1) return 2;
    if (d == 2 || d == 4) return 3;
    if (d == 3) return -1;
    throw DomainError("internal: unexpected rim/chord separation");
}

}  // namespace

long long EpsilonTable::value(const std::string& a, const std::string& b) const {
    int k = graph->pair_index(a, b);
    if (k < 0) {
        if (graph->edge_index(a) < 0) throw DomainError("unknown edge label: " + a);
        if (graph->edge_index(b) < 0) throw DomainError("unknown edge label: " + b);
        throw DomainError("edges " + a + " and " + b + " are not disjoint");
    }
    return vals[k];
}

long long EpsilonTable::max_abs() const {
    long long m = 0;
    for (long long v : vals) m = std::max(m, std::llabs(v));
    return m;
}

EpsilonTable zero_table(GraphPtr g, std::string name) {
    EpsilonTable t;
    t.graph = std::move(g);
    t.name = std::move(name);
    t.vals.assign(t.graph->pair_count(), 0);
    return t;
}

EpsilonTable builtin_epsilon(const std::string& key, int n) {
    GraphPtr g;
    if (key == "2k3")
        g = build_family("2K3");
    else if (key == "k5")
        g = build_family("K5");
    else if (key == "k33")
        g = build_family("K33");
    else if (key == "k7")
        g = build_family("K7");
    else if (key == "k6-ex27" || key == "k6-sec5")
        g = build_family("K6");
    else if (key == "heawood")
        g = build_family("Heawood");
    else if (key == "mobius") {
        if (n == 3)
            throw DomainError("no built-in table for M3; use the K33 table for M3");
        if (n < 5 || n % 2 == 0)
            throw DomainError("built-in Mobius table requires odd n >= 5");
        g = build_family("Mobius", n);
    } else
        throw DomainError("unknown built-in table: " + key +
                          " (expected 2k3, k5, k33, k7, mobius, heawood, k6-ex27, k6-sec5)");

    EpsilonTable t = zero_table(g, key);
    for (int k = 0; k < g->pair_count(); ++k) {
        auto [la, lb] = g->pair_labels(k);
        auto [fa, ia] = split_label(la);
        auto [fb, ib] = split_label(lb);
        if (key == "2k3")
            t.vals[k] = 1;
        else if (key == "k5")
            t.vals[k] = val_k5(fa, fb);
        else if (key == "k33")
            t.vals[k] = val_k33(fa, ia, fb, ib);
        else if (key == "k7")
            t.vals[k] = val_k7(fa, fb);
        else if (key == "k6-ex27")
            t.vals[k] = val_k6_ex27(fa, ia, fb, ib);
        else if (key == "k6-sec5")
            t.vals[k] = val_k6_sec5(fa, ia, fb, ib);
        else if (key == "mobius")
            t.vals[k] = val_mobius(n, fa, ia, fb, ib);
        else
            t.vals[k] = val_heawood(fa, ia, fb, ib);
    }
    return t;
}

EpsilonTable m3_inherited_table() {
    GraphPtr m3 = build_family("Mobius", 3);
    EpsilonTable k33 = builtin_epsilon("k33");
    EpsilonTable t = zero_table(m3, "k33-on-m3");
    auto corr = [&](char f, int i) -> std::string {
        return (f == 'x' ? "c" : "b") + std::to_string(i);
    };
    auto dfac = [&](char f, int i) -> long long {
        if (f == 'y') return -1;
        return (i % 2 == 1) ? 1 : -1;
    };
    for (int k = 0; k < m3->pair_count(); ++k) {
        auto [la, lb] = m3->pair_labels(k);
        auto [fa, ia] = split_label(la);
        auto [fb, ib] = split_label(lb);
        t.vals[k] = dfac(fa, ia) * dfac(fb, ib) * k33.value(corr(fa, ia), corr(fb, ib));
    }
    return t;
}

HomCheck verify_homomorphism(const EpsilonTable& t) {
    const LabeledGraph& g = *t.graph;
    HomCheck res;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.incident(e, v)) continue;
            long long defect = 0;
            for (int h = 0; h < g.edge_count(); ++h) {
                if (!g.incident(h, v)) continue;
                int k = g.pair_index(e, h);
                if (k < 0) continue;
                defect += (g.edge(h).tail == v ? 1 : -1) * t.vals[k];
            }
            if (defect != 0) {
                res.ok = false;
                res.edge = g.edge(e).label;
                res.vertex = g.vertices()[v];
                res.defect = defect;
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

namespace {

long long to_ll(const Int& x) {
    if (!x.fits_slong_p()) throw DomainError("table entry exceeds machine range");
    return static_cast<long long>(x.get_si());
}

}  // namespace

SolveResult solve_epsilon(GraphPtr g, const std::vector<Pin>& pins) {
    LinkingModule lm(g);
    const int P = lm.pair_count();
    const int R = lm.rank();
    std::vector<int> pin_pair;
    for (const auto& p : pins) {
        int k = g->pair_index(p.a, p.b);
        if (k < 0) {
            if (g->edge_index(p.a) < 0) throw DomainError("unknown edge label: " + p.a);
            if (g->edge_index(p.b) < 0) throw DomainError("unknown edge label: " + p.b);
            throw DomainError("pinned edges " + p.a + " and " + p.b + " are not disjoint");
        }
        pin_pair.push_back(k);
    }
    Mat M(pins.size(), Vec(R, 0));
    Vec w(pins.size(), 0);
    for (size_t p = 0; p < pins.size(); ++p) {
        for (int j = 0; j < R; ++j) M[p][j] = lm.functional_basis()[j][pin_pair[p]];
        w[p] = static_cast<long>(pins[p].value);
    }
    SolveResult out;
    out.particular = zero_table(g, "solve(" + g->name() + ")");
    if (pins.empty()) {
        out.consistent = true;
        out.solution_rank = R;
        for (int j = 0; j < R; ++j) {
            EpsilonTable bt = zero_table(g, "basis" + std::to_string(j));
            for (int k = 0; k < P; ++k) bt.vals[k] = to_ll(lm.functional_basis()[j][k]);
            out.basis.push_back(std::move(bt));
        }
        return out;
    }
    SnfResult s = snf(M);
    Vec uw = mat_vec(s.U, w);
    Vec y(R, 0);
    for (int i = 0; i < s.rank; ++i) {
        if (uw[i] % s.diag[i] != 0) return out;  // no integer solution
        y[i] = uw[i] / s.diag[i];
    }
    for (int i = s.rank; i < static_cast<int>(pins.size()); ++i)
        if (uw[i] != 0) return out;  // inconsistent pins
    Vec c = mat_vec(s.V, y);
    for (int k = 0; k < P; ++k) {
        Int acc = 0;
        for (int j = 0; j < R; ++j) acc += c[j] * lm.functional_basis()[j][k];
        out.particular.vals[k] = to_ll(acc);
    }
    out.consistent = true;
    out.solution_rank = R - s.rank;
    for (int f = s.rank; f < R; ++f) {
        Vec yb(R, 0);
        yb[f] = 1;
        Vec cb = mat_vec(s.V, yb);
        EpsilonTable bt = zero_table(g, "basis" + std::to_string(f - s.rank));
        for (int k = 0; k < P; ++k) {
            Int acc = 0;
            for (int j = 0; j < R; ++j) acc += cb[j] * lm.functional_basis()[j][k];
            bt.vals[k] = to_ll(acc);
        }
        out.basis.push_back(std::move(bt));
    }
    return out;
}

EpsilonTable pullback_epsilon(const SubgraphEmbedding& emb, const EpsilonTable& pattern_table) {
    if (!pattern_table.graph->same_structure(*emb.pattern))
        throw DomainError("pattern table does not match the embedding's pattern");
    const LabeledGraph& h = *emb.host;
    EpsilonTable t = zero_table(emb.host, "pull(" + emb.tag + ")");
    for (int k = 0; k < h.pair_count(); ++k) {
        auto [a, b] = h.disjoint_edge_pairs()[k];
        int A = emb.edge_img[a];
        int B = emb.edge_img[b];
        if (A < 0 || B < 0) continue;
        int pk = emb.pattern->pair_index(A, B);
        if (pk < 0) continue;
        t.vals[k] = emb.edge_dir[a] * emb.edge_dir[b] * pattern_table.at(pk);
    }
    return t;
}

EpsilonTable combine_epsilons(const std::vector<std::pair<long long, const EpsilonTable*>>& terms,
                              std::string name) {
    if (terms.empty()) throw DomainError("no tables to combine");
    EpsilonTable out = zero_table(terms[0].second->graph, std::move(name));
    for (const auto& [c, t] : terms) {
        if (!t->graph->same_structure(*out.graph))
            throw DomainError("tables to combine live on different graphs");
        for (size_t k = 0; k < out.vals.size(); ++k) out.vals[k] += c * t->vals[k];
    }
    return out;
}

EpsilonTable default_pattern_table(const SubgraphEmbedding& emb) {
    if (!emb.pin_a.empty()) {
        SolveResult s = solve_epsilon(emb.pattern, {Pin{emb.pin_a, emb.pin_b, 1}});
        if (!s.consistent || s.solution_rank != 0)
            throw DomainError("pattern pin does not determine a unique table for " + emb.tag);
        EpsilonTable t = std::move(s.particular);
        t.name = emb.tag;
        return t;
    }
    const std::string& pn = emb.pattern->name();
    if (pn == "K5") return builtin_epsilon("k5");
    if (pn == "K33") return builtin_epsilon("k33");
    if (pn == "2K3") return builtin_epsilon("2k3");
    throw DomainError("no default table for pattern " + pn);
}

EpsilonTable combined_subgraph_table(GraphPtr host) {
    int n = 0;
    bool mob = parse_mobius_name(host->name(), &n);
    if (!(host->name() == "Heawood" || (mob && n >= 5 && n % 2 == 1)))
        throw DomainError("combined table is defined for odd Mobius ladders and the Heawood graph");
    auto embs = enumerate_pattern_subgraphs(host, "K33");
    EpsilonTable out = zero_table(host, "combined(" + host->name() + ")");
    for (const auto& emb : embs) {
        EpsilonTable part = pullback_epsilon(emb, default_pattern_table(emb));
        for (size_t k = 0; k < out.vals.size(); ++k) out.vals[k] += part.vals[k];
    }
    return out;
}

DecomposeResult decompose_epsilon(const EpsilonTable& target,
                                  const std::vector<EpsilonTable>& parts) {
    DecomposeResult out;
    if (parts.empty()) return out;
    const int P = target.graph->pair_count();
    const int k = static_cast<int>(parts.size());
    Mat A(P, Vec(k, 0));
    for (int q = 0; q < k; ++q) {
        if (!parts[q].graph->same_structure(*target.graph))
            throw DomainError("decomposition parts live on a different graph");
        for (int r = 0; r < P; ++r) A[r][q] = static_cast<long>(parts[q].vals[r]);
    }
    Vec t(P, 0);
    for (int r = 0; r < P; ++r) t[r] = static_cast<long>(target.vals[r]);
    SnfResult s = snf(A);
    Vec ut = mat_vec(s.U, t);
    for (int i = s.rank; i < P; ++i)
        if (ut[i] != 0) return out;  // outside the rational span
    Int m = 1;
    for (int i = 0; i < s.rank; ++i) {
        Int g = gcd(s.diag[i], ut[i]);
        m = lcm(m, s.diag[i] / g);
    }
    Vec y(k, 0);
    for (int i = 0; i < s.rank; ++i) y[i] = m * ut[i] / s.diag[i];
    Vec c = mat_vec(s.V, y);
    // Exactness check of the cleared identity.
    for (int r = 0; r < P; ++r) {
        Int acc = 0;
        for (int q = 0; q < k; ++q) acc += c[q] * Int(static_cast<long>(parts[q].vals[r]));
        if (acc != m * Int(static_cast<long>(target.vals[r])))
            throw DomainError("internal: decomposition identity failed to verify");
    }
    out.ok = true;
    out.m = m;
    out.coeffs = c;
    return out;
}

StandardDecomposition run_standard_decomposition(const std::string& which) {
    StandardDecomposition sd;
    if (which == "k6") {
        GraphPtr k6 = build_family("K6");
        EpsilonTable target = builtin_epsilon("k6-sec5");
        EpsilonTable k5t = builtin_epsilon("k5");
        std::vector<EpsilonTable> parts;
        for (const auto& emb : enumerate_pattern_subgraphs(k6, "K5")) {
            parts.push_back(pullback_epsilon(emb, k5t));
            sd.tags.push_back(emb.tag);
        }
        sd.target_name = target.name;
        sd.result = decompose_epsilon(target, parts);
        return sd;
    }
    if (which == "k7") {
        GraphPtr k7 = build_family("K7");
        EpsilonTable target = builtin_epsilon("k7");
        std::vector<EpsilonTable> parts;
        for (const auto& emb : enumerate_pattern_subgraphs(k7, "K33")) {
            parts.push_back(pullback_epsilon(emb, default_pattern_table(emb)));
            sd.tags.push_back(emb.tag);
        }
        for (const auto& emb : enumerate_pattern_subgraphs(k7, "2K3")) {
            parts.push_back(pullback_epsilon(emb, default_pattern_table(emb)));
            sd.tags.push_back(emb.tag);
        }
        sd.target_name = target.name;
        sd.result = decompose_epsilon(target, parts);
        return sd;
    }
    throw DomainError("unknown decomposition target: " + which + " (expected k6 or k7)");
}

}  // namespace sgi
