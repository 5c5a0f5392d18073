// Integer linear algebra over arbitrary-precision integers: Smith normal
// form with transform tracking, the boundary-relation matrix of a graph's
// pair lattice, and reduction to the quotient module.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sgi/graph.hpp"

namespace sgi {

using Int = mpz_class;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row-major, rectangular

struct SnfResult {
    Mat U;     // rows x rows, unimodular
    Mat V;     // cols x cols, unimodular
    Vec diag;  // nonnegative invariant factors, d_i | d_{i+1}
    int rank = 0;
    int rows = 0, cols = 0;
};

// U * A * V equals the diagonal matrix carried by `diag`.
SnfResult snf(const Mat& A);

Vec mat_vec(const Mat& M, const Vec& x);
int mat_rank(const Mat& A);

// Relation vector of one (edge, vertex) pair with the vertex not on the
// edge: +-1 on each pair formed with an edge leaving/entering the vertex.
Vec delta_relation(const LabeledGraph& g, int edge, int vertex);

// The quotient of the free module on disjoint edge pairs by all relation
// vectors: rank, torsion, reduction of arbitrary vectors, and the lattice
// of integer functionals vanishing on the relations.
class LinkingModule {
  public:
    explicit LinkingModule(GraphPtr g);

    const GraphPtr& graph() const { return graph_; }
    int pair_count() const { return P_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const std::vector<std::pair<int, int>>& generators() const { return gens_; }  // (edge, vertex)
    const Mat& relation_matrix() const { return B_; }  // P_ rows, one column per generator

    int rank() const { return rank_; }                      // rank of the quotient
    const std::vector<Int>& torsion() const { return torsion_; }  // nontrivial invariant factors

    // Coordinates of x in the free part of the quotient (length == rank()).
    Vec reduce(const Vec& x) const;
    // Basis of integer functionals on the pair lattice that kill every
    // relation; rank() rows of length pair_count().
    const Mat& functional_basis() const { return hom_basis_; }

  private:
    GraphPtr graph_;
    int P_;
    std::vector<std::pair<int, int>> gens_;
    Mat B_;
    SnfResult snf_;
    int rank_;
    std::vector<Int> torsion_;
    Mat hom_basis_;
};

// Closed-form rank for 3-connected simple graphs; DomainError otherwise.
Int rank_formula(const LabeledGraph& g);

}  // namespace sgi
