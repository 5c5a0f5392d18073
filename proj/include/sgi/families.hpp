// Canonical graph families (complete graphs, the two-triangle union, K33,
// Mobius ladders, the Heawood graph) with fixed edge labels and orientations,
// plus enumeration of the curated pattern subgraphs used by decompositions.
#pragma once

#include <string>
#include <vector>

#include "sgi/graph.hpp"

namespace sgi {

// Families: "2K3", "K5", "K33", "K6", "K7", "Mobius" (n >= 3), "Heawood".
// The Mobius ladder M_n is named "M<n>"; all others keep the family name.
GraphPtr build_family(const std::string& family, int n = 0);

// True when `name` is "M<n>"; stores n.
bool parse_mobius_name(const std::string& name, int* n_out);

// Curated pattern-subgraph lists:
//   K6 + "K5"   -> 6 vertex-deleted copies (canonical K5 pattern)
//   K6 + "2K3"  -> the pair of skip-2 triangles (canonical 2K3 pattern)
//   K6 + "K33"  -> outer hexagon + long diagonals (canonical K33 pattern)
//   K7 + "K33"  -> 21 pinned spanning subgraphs (literal patterns)
//   K7 + "2K3"  -> 7 pinned disjoint triangle pairs (literal patterns)
//   M_{2N+1} + "K33" -> 2N+1 pinned rim-plus-three-rungs subgraphs (literal)
//   Heawood + "K33"  -> 7 pinned rim-plus-three-chords subgraphs (literal)
std::vector<SubgraphEmbedding> enumerate_pattern_subgraphs(GraphPtr host,
                                                           const std::string& pattern);

}  // namespace sgi
