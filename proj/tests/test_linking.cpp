// Exact integer linear algebra and the pair-lattice quotient: Smith form
// with transform verification, a second-opinion rank algorithm, boundary
// relations, and frozen ranks for the built-in families.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sgi/families.hpp"
#include "sgi/linking.hpp"
#include "support.hpp"

using namespace sgi;

namespace {

Mat mat_mul(const Mat& a, const Mat& b) {
    const size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Mat c(n, Vec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    return c;
}

// Determinant of a square matrix by fraction-free elimination.
Int bareiss_det(Mat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[c], a[piv]);
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j)
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    return sign > 0 ? prev : Int(-prev);
}

void check_snf_transforms(const Mat& a, const SnfResult& s) {
    Mat d(s.rows, Vec(s.cols, 0));
    for (int i = 0; i < s.rank; ++i) d[i][i] = s.diag[i];
    CHECK(mat_mul(mat_mul(s.U, a), s.V) == d);
    CHECK(abs(bareiss_det(s.U)) == 1);
    CHECK(abs(bareiss_det(s.V)) == 1);
    for (int i = 0; i < s.rank; ++i) {
        CHECK(s.diag[i] > 0);
        if (i + 1 < s.rank) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
}

}  // namespace

TEST_CASE("smith form of a fixed matrix") {
    Mat a = {{2, 4}, {6, 8}};
    auto s = snf(a);
    CHECK(s.rank == 2);
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 4);
    check_snf_transforms(a, s);

    CHECK(mat_vec(a, {1, 1}) == Vec{6, 14});
    CHECK_THROWS_AS(mat_vec(a, {1, 1, 1}), DomainError);

    CHECK(snf(Mat{}).rank == 0);
    CHECK(snf(Mat{{0, 0}, {0, 0}}).rank == 0);
}

TEST_CASE("smith form agrees with fraction-free rank on random matrices") {
    std::mt19937_64 eng(20260822);
    std::uniform_int_distribution<int> rows(1, 6), cols(1, 8);
    for (int iter = 0; iter < 30; ++iter) {
        Mat a = testsup::random_matrix(eng, rows(eng), cols(eng), -9, 9);
        auto s = snf(a);
        CHECK(s.rank == testsup::bareiss_rank(a));
        CHECK(mat_rank(a) == s.rank);
        check_snf_transforms(a, s);
    }
}

TEST_CASE("boundary relation of an edge-vertex pair") {
    auto g = build_family("2K3");
    const int e1 = g->edge_index_checked("e1");
    const int d1 = g->edge_index_checked("d1");
    const int d3 = g->edge_index_checked("d3");

    // Edges through b1 that avoid e1: d1 leaves b1, d3 enters it.
    Vec v = delta_relation(*g, e1, g->vertex_index("b1"));
    REQUIRE(static_cast<int>(v.size()) == g->pair_count());
    for (int p = 0; p < g->pair_count(); ++p) {
        if (p == g->pair_index(e1, d1))
            CHECK(v[p] == 1);
        else if (p == g->pair_index(e1, d3))
            CHECK(v[p] == -1);
        else
            CHECK(v[p] == 0);
    }

    // A vertex inside the same triangle as the edge: every edge through it
    // touches the edge, so the relation is empty.
    Vec w = delta_relation(*g, e1, g->vertex_index("a3"));
    for (const auto& x : w) CHECK(x == 0);

    // Signs follow edge direction at the chosen vertex.
    const int d2 = g->edge_index_checked("d2");
    Vec u = delta_relation(*g, d2, g->vertex_index("a3"));
    CHECK(u[g->pair_index(d2, g->edge_index("e3"))] == 1);
    CHECK(u[g->pair_index(d2, g->edge_index("e2"))] == -1);

    CHECK_THROWS_AS(delta_relation(*g, e1, g->vertex_index("a1")), DomainError);
    CHECK_THROWS_AS(delta_relation(*g, e1, g->vertex_index("a2")), DomainError);
}

TEST_CASE("built-in family modules: ranks, torsion, relations, functionals") {
    struct Expect {
        const char* family;
        int pairs, relation_rank, rank;
        bool formula;
    };
    const Expect table[] = {
        {"2K3", 9, 8, 1, false},      {"K5", 15, 14, 1, true},
        {"K33", 18, 17, 1, true},     {"K6", 45, 35, 10, true},
        {"K7", 105, 69, 36, true},    {"M4", 42, 39, 3, true},
        {"M5", 75, 69, 6, true},      {"M6", 117, 107, 10, true},
        {"M7", 168, 153, 15, true},   {"Heawood", 168, 153, 15, true},
    };
    for (const auto& ex : table) {
        CAPTURE(ex.family);
        int n = 0;
        auto g = parse_mobius_name(ex.family, &n) ? build_family("Mobius", n)
                                                  : build_family(ex.family);
        LinkingModule m(g);
        CHECK(m.pair_count() == ex.pairs);
        CHECK(m.generator_count() == g->edge_count() * (g->vertex_count() - 2));
        CHECK(m.rank() == ex.rank);
        CHECK(m.torsion().empty());

        const Mat& b = m.relation_matrix();
        REQUIRE(static_cast<int>(b.size()) == ex.pairs);

        // Second-opinion rank of the relation matrix through an unrelated
        // elimination algorithm; the quotient rank must be its corank.
        CHECK(testsup::bareiss_rank(b) == ex.relation_rank);
        CHECK(m.rank() == ex.pairs - ex.relation_rank);

        if (ex.formula)
            CHECK(rank_formula(*g) == ex.rank);
        else
            CHECK_THROWS_AS(rank_formula(*g), DomainError);

        // Every relation column reduces to zero in the quotient.
        for (int j = 0; j < m.generator_count(); ++j) {
            Vec col(ex.pairs);
            for (int p = 0; p < ex.pairs; ++p) col[p] = b[p][j];
            Vec r = m.reduce(col);
            REQUIRE(static_cast<int>(r.size()) == ex.rank);
            for (const auto& x : r) CHECK(x == 0);
        }

        // Every functional in the basis vanishes on every relation.
        const Mat& f = m.functional_basis();
        REQUIRE(static_cast<int>(f.size()) == ex.rank);
        for (const auto& row : f) {
            REQUIRE(static_cast<int>(row.size()) == ex.pairs);
            for (int j = 0; j < m.generator_count(); ++j) {
                Int dot = 0;
                for (int p = 0; p < ex.pairs; ++p) dot += row[p] * b[p][j];
                CHECK(dot == 0);
            }
        }
    }
    CHECK_THROWS_AS(LinkingModule(nullptr), DomainError);
}

TEST_CASE("reduce validates input length") {
    auto g = build_family("K5");
    LinkingModule m(g);
    CHECK_THROWS_AS(m.reduce(Vec(3, 1)), DomainError);
    // The zero vector reduces to zero.
    Vec r = m.reduce(Vec(m.pair_count(), 0));
    for (const auto& x : r) CHECK(x == 0);
}
