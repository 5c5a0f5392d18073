// Combinatorial crossing diagrams over a labeled graph: signed crossings
// with ordered positions along edges, pairwise linking accumulation,
// mirroring, restriction along subgraph embeddings, and linking numbers of
// disjoint cycles.
#pragma once

#include <string>
#include <vector>

#include "sgi/graph.hpp"
#include "sgi/linking.hpp"

namespace sgi {

struct Crossing {
    int id = 0;
    int over_edge = -1;
    long long over_pos = 0;
    int under_edge = -1;
    long long under_pos = 0;
    int sign = +1;
};

// One crossing-side lying on an edge.
struct StrandSide {
    long long pos = 0;
    int cidx = -1;  // index into Diagram::crossings
    bool is_over = false;
};

struct Diagram {
    GraphPtr graph;
    std::vector<Crossing> crossings;
    int next_id = 1;

    static Diagram empty(GraphPtr g);

    // Indices/positions well-formed, signs +-1, positions distinct per edge.
    void validate() const;

    int find_index(int id) const;  // -1 if absent
    const Crossing& by_id(int id) const;

    // Sides on `edge`, sorted by position.
    std::vector<StrandSide> strand(int edge) const;

    int add_crossing(int over_e, long long opos, int under_e, long long upos, int sign);
    void remove_id(int id);
};

// Sum of crossing signs per disjoint edge pair (adjacent and self pairs
// contribute nowhere).
Vec pairwise_linking(const Diagram& d);

// Reflection: every crossing swaps strands and flips sign.
Diagram mirror_diagram(const Diagram& d);

// Carry the diagram onto the embedding's pattern: crossings off the image
// are dropped, positions are re-ordered along smoothed paths, and signs pick
// up the direction factors of the two strands.
Diagram restrict_diagram(const Diagram& d, const SubgraphEmbedding& emb);

// Half the signed crossing count between two vertex-disjoint cycles, given
// as edge-label lists; DomainError if a set is not a cycle, the cycles
// intersect, or the count is odd.
Int linking_number(const Diagram& d, const std::vector<std::string>& cycle_a,
                   const std::vector<std::string>& cycle_b);

}  // namespace sgi
