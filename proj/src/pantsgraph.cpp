#include "fnh/pantsgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fnh {

std::string to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::FLUTE: return "FLUTE";
        case GraphFamily::BIINFINITE_FLUTE: return "BIINFINITE_FLUTE";
        case GraphFamily::LOCH_NESS: return "LOCH_NESS";
        case GraphFamily::CANTOR_TREE: return "CANTOR_TREE";
    }
    return "?";
}

namespace {

// Bi-infinite ray through Z folded as 0 -> 0, k -> 2k-1, -k -> 2k.
long folded_to_z(std::size_t id) {
    if (id == 0) return 0;
    return id % 2 == 1 ? static_cast<long>((id + 1) / 2) : -static_cast<long>(id / 2);
}

std::size_t z_to_folded(long z) {
    if (z == 0) return 0;
    return z > 0 ? static_cast<std::size_t>(2 * z - 1) : static_cast<std::size_t>(-2 * z);
}

}  // namespace

std::vector<std::size_t> DualGraph::neighbors(std::size_t v) const {
    switch (family) {
        case GraphFamily::FLUTE: {
            std::vector<std::size_t> out;
            if (v > 0) out.push_back(v - 1);
            out.push_back(v + 1);
            return out;
        }
        case GraphFamily::BIINFINITE_FLUTE: {
            long z = folded_to_z(v);
            std::vector<std::size_t> out = {z_to_folded(z - 1), z_to_folded(z + 1)};
            std::sort(out.begin(), out.end());
            return out;
        }
        case GraphFamily::LOCH_NESS: {
            // Edge v ~ v+1 doubled when v is even: each doubled pair of
            // parallel edges closes one handle.
            std::vector<std::size_t> out;
            if (v > 0) {
                std::size_t mult = (v - 1) % 2 == 0 ? 2 : 1;
                out.insert(out.end(), mult, v - 1);
            }
            std::size_t mult = v % 2 == 0 ? 2 : 1;
            out.insert(out.end(), mult, v + 1);
            return out;
        }
        case GraphFamily::CANTOR_TREE: {
            std::vector<std::size_t> out;
            if (v > 0) out.push_back((v - 1) / 2);
            out.push_back(2 * v + 1);
            out.push_back(2 * v + 2);
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::size_t DualGraph::dangling(std::size_t v) const {
    switch (family) {
        case GraphFamily::FLUTE:
            return v == 0 ? 2 : 1;  // the cap pants carries two ends
        case GraphFamily::BIINFINITE_FLUTE:
            return 1;
        case GraphFamily::LOCH_NESS:
            return v == 0 ? 1 : 0;
        case GraphFamily::CANTOR_TREE:
            return v == 0 ? 1 : 0;
    }
    throw std::logic_error("unreachable");
}

bool FiniteGraph::has_vertex(std::size_t v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<std::size_t> FiniteGraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v && a != b) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FiniteGraph::edge_list_text() const {
    std::vector<std::pair<std::size_t, std::size_t>> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (const auto& [a, b] : sorted) os << a << " " << b << "\n";
    return os.str();
}

FiniteGraph truncate(const DualGraph& g, std::size_t k) {
    FiniteGraph out;
    std::map<std::size_t, std::size_t> dist;
    std::deque<std::size_t> queue;
    dist[g.base_vertex()] = 0;
    queue.push_back(g.base_vertex());
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        if (dist[v] == k) continue;
        for (std::size_t u : g.neighbors(v)) {
            if (dist.count(u)) continue;
            dist[u] = dist[v] + 1;
            queue.push_back(u);
        }
    }
    for (const auto& [v, d] : dist) out.vertices.push_back(v);
    std::sort(out.vertices.begin(), out.vertices.end());
    for (std::size_t v : out.vertices) {
        for (std::size_t u : g.neighbors(v))
            if (u >= v && dist.count(u)) out.edges.emplace_back(v, u);
        std::size_t dang = g.dangling(v);
        if (dang > 0) out.dangling[v] = dang;
    }
    return out;
}

FiniteGraph maximal_tree(const FiniteGraph& g) {
    if (g.vertices.empty()) throw std::invalid_argument("empty graph has no spanning tree");
    FiniteGraph tree;
    tree.vertices = g.vertices;
    tree.dangling = g.dangling;
    std::set<std::size_t> seen;
    std::deque<std::size_t> queue;
    const std::size_t root = g.vertices.front();
    seen.insert(root);
    queue.push_back(root);
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u : g.neighbors(v)) {
            if (u == v || seen.count(u)) continue;
            seen.insert(u);
            tree.edges.emplace_back(std::min(v, u), std::max(v, u));
            queue.push_back(u);
        }
    }
    if (seen.size() != g.vertices.size())
        throw std::invalid_argument("spanning tree requires a connected graph");
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

FluteDescriptor extract_flute(const FiniteGraph& tree, std::size_t seed) {
    if (tree.vertices.empty()) throw std::invalid_argument("empty tree");
    if (!tree.has_vertex(seed)) throw std::invalid_argument("seed vertex not in tree");
    // BFS distances and parents from the seed.
    std::map<std::size_t, std::size_t> dist, parent;
    std::deque<std::size_t> queue;
    dist[seed] = 0;
    queue.push_back(seed);
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u : tree.neighbors(v)) {
            if (dist.count(u)) continue;
            dist[u] = dist[v] + 1;
            parent[u] = v;
            queue.push_back(u);
        }
    }
    // Farthest vertex, smallest id on ties (map iteration is ascending).
    std::size_t far = seed, far_d = 0;
    for (const auto& [v, d] : dist) {
        if (d > far_d) {
            far = v;
            far_d = d;
        }
    }
    FluteDescriptor out;
    for (std::size_t v = far;; v = parent[v]) {
        out.spine.push_back(v);
        if (v == seed) break;
    }
    std::reverse(out.spine.begin(), out.spine.end());
    std::set<std::size_t> on_spine(out.spine.begin(), out.spine.end());
    for (std::size_t i = 0; i + 1 < out.spine.size(); ++i)
        out.spine_edges.emplace_back(std::min(out.spine[i], out.spine[i + 1]),
                                     std::max(out.spine[i], out.spine[i + 1]));
    for (std::size_t v : out.spine) {
        for (std::size_t u : tree.neighbors(v))
            if (!on_spine.count(u)) out.rungs.emplace_back(std::min(v, u), std::max(v, u));
        auto it = tree.dangling.find(v);
        if (it != tree.dangling.end()) out.boundary[v] = it->second;
    }
    std::sort(out.rungs.begin(), out.rungs.end());
    out.rungs.erase(std::unique(out.rungs.begin(), out.rungs.end()), out.rungs.end());
    return out;
}

}  // namespace fnh
