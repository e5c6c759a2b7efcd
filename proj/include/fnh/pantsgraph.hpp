// Lazily generated trivalent dual graphs of pants decompositions, BFS
// truncations, spanning trees, and flute extraction along a longest ray.
//
// Vertices are pants, edges are pants curves (parallel edges allowed),
// and dangling half-edges stand for boundary curves or cusps that keep
// every vertex trivalent.  Vertex ids are stable across truncations.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fnh {

enum class GraphFamily {
    FLUTE,            // ray 0-1-2-..., one dangling end per pants (two at the cap)
    BIINFINITE_FLUTE, // the ray through Z, folded into ids 0,1,2,...
    LOCH_NESS,        // chain with alternating doubled edges, one handle per pair
    CANTOR_TREE,      // rooted binary tree
};

std::string to_string(GraphFamily f);

struct DualGraph {
    GraphFamily family = GraphFamily::FLUTE;

    // Neighbor ids with multiplicity (a doubled edge lists its endpoint
    // twice), ascending.
    std::vector<std::size_t> neighbors(std::size_t v) const;
    // Number of dangling half-edges at v.
    std::size_t dangling(std::size_t v) const;
    std::size_t base_vertex() const { return 0; }
};

struct FiniteGraph {
    std::vector<std::size_t> vertices;                        // ascending ids
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // u <= v, repeated per multiplicity
    std::map<std::size_t, std::size_t> dangling;              // vertex -> half-edge count

    bool has_vertex(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;  // with multiplicity
    // One edge per line, "u v", sorted.
    std::string edge_list_text() const;
};

// BFS ball of radius k around the base vertex; induced subgraph with
// stable ids, so truncate(g, k) embeds in truncate(g, k+1).
FiniteGraph truncate(const DualGraph& g, std::size_t k);

// BFS spanning tree rooted at the smallest vertex id, neighbors visited in
// ascending order.  Parallel edges collapse, self-loops drop.  Throws on
// disconnected input.
FiniteGraph maximal_tree(const FiniteGraph& g);

struct FluteDescriptor {
    std::vector<std::size_t> spine;                               // path vertices from the seed
    std::vector<std::pair<std::size_t, std::size_t>> spine_edges; // consecutive pants curves
    std::vector<std::pair<std::size_t, std::size_t>> rungs;       // tree edges leaving the spine
    std::map<std::size_t, std::size_t> boundary;                  // dangling half-edges on the spine

    std::size_t spine_length() const { return spine.empty() ? 0 : spine.size() - 1; }
};

// Longest simple path in the tree starting at seed (ties: smallest far
// vertex id); the pants along it and the edges emanating from it form the
// embedded flute.
FluteDescriptor extract_flute(const FiniteGraph& tree, std::size_t seed);

}  // namespace fnh
