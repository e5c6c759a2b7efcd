#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fnh/pantsgraph.hpp"

using namespace fnh;

namespace {

std::size_t degree(const FiniteGraph& g, std::size_t v) {
    std::size_t d = 0;
    for (const auto& [a, b] : g.edges) {
        if (a == v) ++d;
        if (b == v) ++d;  // self-loops count twice
    }
    return d;
}

bool is_induced_subgraph(const FiniteGraph& small, const FiniteGraph& big) {
    std::set<std::size_t> verts(small.vertices.begin(), small.vertices.end());
    auto count_in = [&](const FiniteGraph& g, std::size_t a, std::size_t b) {
        return std::count(g.edges.begin(), g.edges.end(), std::make_pair(a, b));
    };
    for (std::size_t a : small.vertices)
        for (std::size_t b : small.vertices) {
            if (a > b) continue;
            if (count_in(small, a, b) != count_in(big, a, b)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("trivalence across all families") {
    for (GraphFamily fam : {GraphFamily::FLUTE, GraphFamily::BIINFINITE_FLUTE,
                            GraphFamily::LOCH_NESS, GraphFamily::CANTOR_TREE}) {
        DualGraph g{fam};
        for (std::size_t v = 0; v < 60; ++v) {
            std::size_t d = g.neighbors(v).size() + g.dangling(v);
            CHECK(d == 3);
        }
    }
}

TEST_CASE("truncation sizes") {
    CHECK(truncate(DualGraph{GraphFamily::CANTOR_TREE}, 2).vertices.size() == 7);
    CHECK(truncate(DualGraph{GraphFamily::CANTOR_TREE}, 0).vertices.size() == 1);

    FiniteGraph flute3 = truncate(DualGraph{GraphFamily::FLUTE}, 3);
    CHECK(flute3.vertices == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(flute3.edges.size() == 3);
    CHECK(flute3.dangling.at(0) == 2);
    CHECK(flute3.dangling.at(3) == 1);

    FiniteGraph bi2 = truncate(DualGraph{GraphFamily::BIINFINITE_FLUTE}, 2);
    CHECK(bi2.vertices.size() == 5);  // 0, +-1, +-2 in folded ids
}

TEST_CASE("truncation coherence: each ball is induced in the next") {
    for (GraphFamily fam : {GraphFamily::FLUTE, GraphFamily::BIINFINITE_FLUTE,
                            GraphFamily::LOCH_NESS, GraphFamily::CANTOR_TREE}) {
        DualGraph g{fam};
        for (std::size_t k = 1; k <= 10; ++k) {
            FiniteGraph small = truncate(g, k - 1);
            FiniteGraph big = truncate(g, k);
            std::set<std::size_t> big_verts(big.vertices.begin(), big.vertices.end());
            for (std::size_t v : small.vertices) CHECK(big_verts.count(v) == 1);
            CHECK(is_induced_subgraph(small, big));
        }
    }
}

TEST_CASE("spanning tree of a tree is the tree itself") {
    FiniteGraph t = truncate(DualGraph{GraphFamily::CANTOR_TREE}, 4);
    FiniteGraph tree = maximal_tree(t);
    CHECK(tree.edges == t.edges);
    CHECK(tree.vertices == t.vertices);
}

TEST_CASE("spanning tree drops handle loops and cycles") {
    FiniteGraph loch = truncate(DualGraph{GraphFamily::LOCH_NESS}, 6);
    FiniteGraph tree = maximal_tree(loch);
    CHECK(tree.vertices.size() == 7);
    CHECK(tree.edges.size() == tree.vertices.size() - 1);
    // The doubled edges collapse to the spine path.
    for (std::size_t v = 0; v + 1 < 7; ++v)
        CHECK(std::count(tree.edges.begin(), tree.edges.end(), std::make_pair(v, v + 1)) == 1);

    FiniteGraph cycle;
    cycle.vertices = {0, 1, 2, 3};
    cycle.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    FiniteGraph path = maximal_tree(cycle);
    CHECK(path.edges.size() == 3);
    std::size_t leaves = 0;
    for (std::size_t v : path.vertices)
        if (degree(path, v) == 1) ++leaves;
    CHECK(leaves == 2);  // a path has two ends

    FiniteGraph disconnected;
    disconnected.vertices = {0, 1, 2};
    disconnected.edges = {{0, 1}};
    CHECK_THROWS_AS(maximal_tree(disconnected), std::invalid_argument);
}

TEST_CASE("spanning tree spans: vertex sets agree, edge count is n - 1") {
    for (GraphFamily fam : {GraphFamily::FLUTE, GraphFamily::LOCH_NESS,
                            GraphFamily::CANTOR_TREE}) {
        FiniteGraph g = truncate(DualGraph{fam}, 7);
        FiniteGraph tree = maximal_tree(g);
        CHECK(tree.vertices == g.vertices);
        CHECK(tree.edges.size() == g.vertices.size() - 1);
    }
}

TEST_CASE("flute extraction covers the flute") {
    FiniteGraph g = truncate(DualGraph{GraphFamily::FLUTE}, 8);
    FluteDescriptor d = extract_flute(maximal_tree(g), 0);
    CHECK(d.spine == g.vertices);
    CHECK(d.spine_length() == 8);
    CHECK(d.rungs.empty());
    CHECK(d.boundary.at(0) == 2);
    CHECK(d.boundary.size() == d.spine.size());
}

TEST_CASE("flute extraction on the Cantor tree") {
    FiniteGraph g = truncate(DualGraph{GraphFamily::CANTOR_TREE}, 10);
    FiniteGraph tree = maximal_tree(g);
    FluteDescriptor d = extract_flute(tree, 0);
    CHECK(d.spine_length() == 10);
    // Ties break toward the smallest far vertex: the leftmost ray.
    std::size_t expect = 0;
    for (std::size_t i = 0; i < d.spine.size(); ++i) {
        CHECK(d.spine[i] == expect);
        expect = 2 * expect + 1;
    }
    // Spine degree <= 2 within the descriptor; rungs leave the spine.
    std::set<std::size_t> on_spine(d.spine.begin(), d.spine.end());
    for (const auto& [a, b] : d.rungs) {
        CHECK(on_spine.count(a) + on_spine.count(b) == 1);
    }
    // All spine edges and rungs are edges of the original graph.
    std::set<std::pair<std::size_t, std::size_t>> graph_edges(g.edges.begin(), g.edges.end());
    for (const auto& e : d.spine_edges) CHECK(graph_edges.count(e) == 1);
    for (const auto& e : d.rungs) CHECK(graph_edges.count(e) == 1);
}

TEST_CASE("flute extraction along the Loch Ness spine") {
    FiniteGraph g = truncate(DualGraph{GraphFamily::LOCH_NESS}, 10);
    FluteDescriptor d = extract_flute(maximal_tree(g), 0);
    CHECK(d.spine_length() == 10);
    for (std::size_t i = 0; i < d.spine.size(); ++i) CHECK(d.spine[i] == i);

    CHECK_THROWS_AS(extract_flute(maximal_tree(g), 99), std::invalid_argument);
}

TEST_CASE("extraction from an interior seed stays a simple path") {
    FiniteGraph tree = maximal_tree(truncate(DualGraph{GraphFamily::CANTOR_TREE}, 6));
    FluteDescriptor d = extract_flute(tree, 1);
    CHECK(d.spine.front() == 1);
    CHECK(d.spine_length() == 7);  // up through the root, down the far subtree
    std::set<std::size_t> unique(d.spine.begin(), d.spine.end());
    CHECK(unique.size() == d.spine.size());
}

TEST_CASE("edge list export is stable") {
    FiniteGraph g = truncate(DualGraph{GraphFamily::LOCH_NESS}, 2);
    CHECK(g.edge_list_text() == "0 1\n0 1\n1 2\n");
}
