// Integer pair-tables on a graph's disjoint-pair basis: built-in tables for
// the canonical families, homomorphism verification, constrained solving,
// pullback along subgraph embeddings, and integer decomposition with a
// minimal positive multiplier.
#pragma once

#include <string>
#include <vector>

#include "sgi/families.hpp"
#include "sgi/graph.hpp"
#include "sgi/linking.hpp"

namespace sgi {

struct EpsilonTable {
    GraphPtr graph;
    std::string name;
    std::vector<long long> vals;  // indexed by disjoint-pair index

    long long at(int pair) const { return vals.at(pair); }
    // DomainError for unknown labels or a same/adjacent pair.
    long long value(const std::string& a, const std::string& b) const;
    // Largest absolute entry (the per-crossing contribution ceiling).
    long long max_abs() const;
};

EpsilonTable zero_table(GraphPtr g, std::string name);

// Keys: "2k3", "k5", "k33", "k7", "mobius" (odd n >= 5), "heawood",
// "k6-ex27", "k6-sec5".
EpsilonTable builtin_epsilon(const std::string& key, int n = 0);

// The K33 table carried onto the canonical M3 through the structural
// correspondence (rim to rim, rungs to rungs) with direction factors.
EpsilonTable m3_inherited_table();

struct HomCheck {
    bool ok = false;
    std::string edge, vertex;  // first failing relation when !ok
    long long defect = 0;
};
// A table passes when it vanishes on every relation vector.
HomCheck verify_homomorphism(const EpsilonTable& t);

struct Pin {
    std::string a, b;
    long long value = 0;
};
struct SolveResult {
    bool consistent = false;
    EpsilonTable particular;
    std::vector<EpsilonTable> basis;  // integer basis of the homogeneous part
    int solution_rank = 0;
};
// Integer tables that vanish on all relations and meet the pinned values.
SolveResult solve_epsilon(GraphPtr g, const std::vector<Pin>& pins);

// Host table induced by a pattern table through an embedding: zero off the
// image, direction-corrected on it.
EpsilonTable pullback_epsilon(const SubgraphEmbedding& emb, const EpsilonTable& pattern_table);

// Integer linear combination of tables on one graph.
EpsilonTable combine_epsilons(const std::vector<std::pair<long long, const EpsilonTable*>>& terms,
                              std::string name);

// Table attached to a curated pattern: the classic table for canonical
// patterns, the pin-normalized generator for pinned literal patterns.
EpsilonTable default_pattern_table(const SubgraphEmbedding& emb);

// Sum over a curated subgraph list of the pullbacks of the default tables.
EpsilonTable combined_subgraph_table(GraphPtr host);

struct DecomposeResult {
    bool ok = false;
    Int m = 0;                 // minimal positive multiplier
    std::vector<Int> coeffs;   // one per part; m * target == sum coeffs[q] * part_q
};
DecomposeResult decompose_epsilon(const EpsilonTable& target,
                                  const std::vector<EpsilonTable>& parts);

struct StandardDecomposition {
    std::string target_name;
    std::vector<std::string> tags;
    DecomposeResult result;
};
// "k6": the uniform K6 table against its six vertex-deleted K5 pullbacks.
// "k7": the K7 table against the 28 pinned K33/2K3 subgraph pullbacks.
StandardDecomposition run_standard_decomposition(const std::string& which);

}  // namespace sgi
