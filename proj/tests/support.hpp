// Shared test helpers: an independent fraction-free rank oracle (so ranks
// from the Smith-form pipeline are cross-checked through a second
// algorithm), seeded random matrices, and seeded random diagrams.
#pragma once

#include <gmpxx.h>

#include <random>
#include <utility>
#include <vector>

#include "sgi/diagram.hpp"
#include "sgi/linking.hpp"

namespace testsup {

// Bareiss fraction-free elimination; exact integer arithmetic throughout.
inline int bareiss_rank(sgi::Mat a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline sgi::Mat random_matrix(std::mt19937_64& eng, int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    sgi::Mat m(rows, sgi::Vec(cols));
    for (auto& row : m)
        for (auto& x : row) x = dist(eng);
    return m;
}

// `n` crossings on uniformly chosen disjoint pairs with random strand order
// and signs; positions stack upward per edge.
inline sgi::Diagram random_diagram(const sgi::GraphPtr& g, int n, unsigned long long seed) {
    std::mt19937_64 eng(seed);
    sgi::Diagram d = sgi::Diagram::empty(g);
    const auto& pairs = g->disjoint_edge_pairs();
    std::uniform_int_distribution<size_t> pick(0, pairs.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<long long> cnt(g->edge_count(), 0);
    for (int i = 0; i < n; ++i) {
        auto [first, second] = pairs[pick(eng)];
        int a = first, b = second;
        if (coin(eng)) std::swap(a, b);
        d.add_crossing(a, 16 * cnt[a]++, b, 16 * cnt[b]++, coin(eng) ? 1 : -1);
    }
    return d;
}

}  // namespace testsup
