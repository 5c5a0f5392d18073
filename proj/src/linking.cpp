// Smith normal form with transforms, relation matrices, and the quotient
// module over the disjoint-pair lattice.
#include "sgi/linking.hpp"

#include <algorithm>
#include <cstdlib>

namespace sgi {

namespace {

Mat identity(int n) {
    Mat I(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

void swap_rows(Mat& M, int a, int b) {
    if (a != b) std::swap(M[a], M[b]);
}

void swap_cols(Mat& M, int a, int b) {
    if (a == b) return;
    for (auto& row : M) std::swap(row[a], row[b]);
}

// row[a] -= q * row[b]
void row_axpy(Mat& M, int a, int b, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < M[a].size(); ++c) M[a][c] -= q * M[b][c];
}

void col_axpy(Mat& M, int a, int b, const Int& q) {
    if (q == 0) return;
    for (auto& row : M) row[a] -= q * row[b];
}

void negate_row(Mat& M, int r) {
    for (auto& x : M[r]) x = -x;
}

}  // namespace

SnfResult snf(const Mat& A) {
    SnfResult res;
    res.rows = static_cast<int>(A.size());
    res.cols = res.rows ? static_cast<int>(A[0].size()) : 0;
    Mat W = A;
    res.U = identity(res.rows);
    res.V = identity(res.cols);
    const int n = std::min(res.rows, res.cols);
    int t = 0;
    while (t < n) {
        // Smallest-magnitude nonzero entry of the trailing block.
        int pr = -1, pc = -1;
        for (int r = t; r < res.rows; ++r)
            for (int c = t; c < res.cols; ++c) {
                if (W[r][c] == 0) continue;
                if (pr < 0 || cmp(abs(W[r][c]), abs(W[pr][pc])) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        swap_rows(W, t, pr);
        swap_rows(res.U, t, pr);
        swap_cols(W, t, pc);
        swap_cols(res.V, t, pc);
        if (W[t][t] < 0) {
            negate_row(W, t);
            negate_row(res.U, t);
        }
        bool dirty = false;
        for (int r = t + 1; r < res.rows; ++r) {
            if (W[r][t] == 0) continue;
            Int q = W[r][t] / W[t][t];  // truncated: remainder smaller than pivot
            row_axpy(W, r, t, q);
            row_axpy(res.U, r, t, q);
            if (W[r][t] != 0) dirty = true;
        }
        for (int c = t + 1; c < res.cols; ++c) {
            if (W[t][c] == 0) continue;
            Int q = W[t][c] / W[t][t];
            col_axpy(W, c, t, q);
            col_axpy(res.V, c, t, q);
            if (W[t][c] != 0) dirty = true;
        }
        if (dirty) continue;  // smaller entries remain; rechoose the pivot
        // Pivot divides its row and column; enforce divisibility of the block.
        bool fixed = false;
        for (int r = t + 1; r < res.rows && !fixed; ++r)
            for (int c = t + 1; c < res.cols && !fixed; ++c)
                if (W[r][c] % W[t][t] != 0) {
                    row_axpy(W, t, r, Int(-1));  // add row r onto row t
                    row_axpy(res.U, t, r, Int(-1));
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }
    res.rank = t;
    res.diag.assign(n, 0);
    for (int i = 0; i < n; ++i) res.diag[i] = W[i][i];
    return res;
}

Vec mat_vec(const Mat& M, const Vec& x) {
    Vec y(M.size(), 0);
    for (size_t r = 0; r < M.size(); ++r) {
        if (M[r].size() != x.size()) throw DomainError("matrix/vector size mismatch");
        for (size_t c = 0; c < x.size(); ++c) y[r] += M[r][c] * x[c];
    }
    return y;
}

int mat_rank(const Mat& A) { return snf(A).rank; }

Vec delta_relation(const LabeledGraph& g, int edge, int vertex) {
    if (g.incident(edge, vertex))
        throw DomainError("relation vector requires a vertex away from the edge");
    Vec v(g.pair_count(), 0);
    for (int h = 0; h < g.edge_count(); ++h) {
        if (!g.incident(h, vertex)) continue;
        int k = g.pair_index(edge, h);
        if (k < 0) continue;  // adjacent to the base edge: not in the lattice
        v[k] += (g.edge(h).tail == vertex) ? 1 : -1;
    }
    return v;
}

static GraphPtr checked_graph(GraphPtr g) {
    if (!g) throw DomainError("module requires a graph");
    return g;
}

LinkingModule::LinkingModule(GraphPtr g)
    : graph_(checked_graph(std::move(g))), P_(graph_->pair_count()) {
    for (int e = 0; e < graph_->edge_count(); ++e)
        for (int v = 0; v < graph_->vertex_count(); ++v)
            if (!graph_->incident(e, v)) gens_.emplace_back(e, v);
    B_.assign(P_, Vec(gens_.size(), 0));
    for (size_t j = 0; j < gens_.size(); ++j) {
        Vec col = delta_relation(*graph_, gens_[j].first, gens_[j].second);
        for (int k = 0; k < P_; ++k) B_[k][j] = col[k];
    }
    snf_ = snf(B_);
    rank_ = P_ - snf_.rank;
    for (int i = 0; i < snf_.rank; ++i)
        if (snf_.diag[i] > 1) torsion_.push_back(snf_.diag[i]);
    hom_basis_.assign(rank_, Vec(P_, 0));
    for (int i = 0; i < rank_; ++i) hom_basis_[i] = snf_.U[snf_.rank + i];
}

Vec LinkingModule::reduce(const Vec& x) const {
    if (static_cast<int>(x.size()) != P_) throw DomainError("vector length must match pair count");
    Vec y(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int c = 0; c < P_; ++c) y[i] += snf_.U[snf_.rank + i][c] * x[c];
    return y;
}

Int rank_formula(const LabeledGraph& g) {
    const int V = g.vertex_count();
    if (V < 4) throw DomainError("rank formula requires a 3-connected simple graph");
    for (int a = 0; a < g.edge_count(); ++a)
        for (int b = a + 1; b < g.edge_count(); ++b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            bool par = (ea.tail == eb.tail && ea.head == eb.head) ||
                       (ea.tail == eb.head && ea.head == eb.tail);
            if (par) throw DomainError("rank formula requires a 3-connected simple graph");
        }
    // Remove every vertex pair and test connectivity of what remains.
    for (int u = 0; u < V; ++u)
        for (int w = u + 1; w < V; ++w) {
            std::vector<int> root(V);
            for (int i = 0; i < V; ++i) root[i] = i;
            auto find = [&](int x) {
                while (root[x] != x) x = root[x] = root[root[x]];
                return x;
            };
            for (const auto& e : g.edges()) {
                if (e.tail == u || e.tail == w || e.head == u || e.head == w) continue;
                root[find(e.tail)] = find(e.head);
            }
            int comps = 0;
            for (int i = 0; i < V; ++i)
                if (i != u && i != w && find(i) == i) ++comps;
            if (comps > 1) throw DomainError("rank formula requires a 3-connected simple graph");
        }
    Int b1 = g.beta1();
    Int sumdeg2 = 0;
    for (int v = 0; v < V; ++v) {
        Int d = g.degree(v);
        sumdeg2 += d * d;
    }
    Int num = b1 * b1 + b1 + 4 * Int(g.edge_count()) - sumdeg2;
    return num / 2;
}

}  // namespace sgi
