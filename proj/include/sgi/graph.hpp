// Labeled oriented graphs: vertices, directed labeled edges, the ordered
// basis of disjoint edge pairs, automorphism search, and structural surgery.
#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "sgi/error.hpp"

namespace sgi {

struct Edge {
    std::string label;
    int tail = -1;  // vertex index
    int head = -1;
};

class LabeledGraph {
  public:
    // Edge spec: (label, tail id, head id).  Edge order fixes the pair-basis
    // order; vertex order is preserved as given.
    static LabeledGraph make(std::string name, std::vector<std::string> vertex_ids,
                             std::vector<std::array<std::string, 3>> edge_specs);

    const std::string& name() const { return name_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(e); }

    int vertex_index(const std::string& id) const;    // -1 if absent
    int edge_index(const std::string& label) const;   // -1 if absent
    int edge_index_checked(const std::string& label) const;  // throws DomainError

    bool edges_adjacent(int a, int b) const;  // share an endpoint (or equal)
    bool incident(int e, int v) const;
    int degree(int v) const;
    int component_count() const;
    int beta1() const;  // |E| - |V| + #components

    // Ordered disjoint-pair basis (lexicographic by edge index, a < b).
    int pair_count() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& disjoint_edge_pairs() const { return pairs_; }
    // -1 when equal or adjacent.
    int pair_index(int a, int b) const;
    int pair_index(const std::string& a, const std::string& b) const;
    std::pair<std::string, std::string> pair_labels(int k) const;

    bool same_structure(const LabeledGraph& o) const;

  private:
    std::string name_;
    std::vector<std::string> verts_;
    std::vector<Edge> edges_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> pair_idx_;  // edge_count^2, -1 for same/adjacent
};

using GraphPtr = std::shared_ptr<const LabeledGraph>;

struct Automorphism {
    std::vector<int> vperm;  // vertex index -> vertex index
    std::vector<int> emap;   // edge index -> edge index
    std::vector<int> edir;   // +1 image direction matches stored, -1 reversed
};

enum class Character { AllPreserved, AllReversed, Mixed };
const char* to_string(Character c);

// Complete automorphism list via backtracking (guard: <= 20 vertices).
// With `constraint`, only automorphisms mapping that edge set onto itself.
std::vector<Automorphism> automorphisms(const LabeledGraph& g,
                                        const std::vector<int>* constraint = nullptr);

// Classifies the direction map over `edge_subset` (must be invariant).
Character orientation_character(const LabeledGraph& g, const Automorphism& a,
                                const std::vector<int>& edge_subset);

// Composition table check helper (group closure; used by tests).
Automorphism compose(const LabeledGraph& g, const Automorphism& f, const Automorphism& s);

// Host-edge -> pattern-edge correspondence, supporting subdivision paths:
// several host edges may map to one pattern edge; path_pos orders them along
// the pattern edge's direction.
struct SubgraphEmbedding {
    GraphPtr host;
    GraphPtr pattern;
    std::string tag;               // e.g. "G3", "K5@2"
    std::vector<int> edge_img;     // host edge -> pattern edge, -1 absent
    std::vector<int> edge_dir;     // +-1 (meaningless where absent)
    std::vector<int> path_pos;     // order along the pattern edge, 0-based
    std::vector<int> vert_img;     // host vertex -> pattern vertex, -1 absent
    // Preferred pin for rank-1 pattern tables (pattern edge labels); empty if unset.
    std::string pin_a, pin_b;

    static SubgraphEmbedding identity(GraphPtr g);
};

// Result of deleting a rung of an even Mobius ladder and smoothing the two
// degree-2 vertices: the canonical child M_{2N-1} plus the merge map.
struct RungSurgery {
    GraphPtr child;
    SubgraphEmbedding merge;  // host = M_{2N}, pattern = child
};

RungSurgery delete_rung_and_smooth(GraphPtr g, const std::string& rung_label);

}  // namespace sgi
