#ifndef DEGCHROM_GRAPH_HPP
#define DEGCHROM_GRAPH_HPP

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degchrom/errors.hpp"

namespace degchrom {

using Vertex = int;

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
  public:
    Graph() = default;
    // Validates endpoints in range, no self-loops, no duplicate edges.
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    // Normalized (u < v) and sorted lexicographically.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Text format: '#' comment lines, first significant line "n <count>", then
// one "<u> <v>" per edge. Throws ParseError with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Inverse of parse_edge_list; edges come out sorted lexicographically.
std::string to_edge_list_text(const Graph& g);

// A Graph certified connected and acyclic.
class LabeledTree {
  public:
    const Graph& graph() const noexcept { return g_; }
    int vertex_count() const noexcept { return g_.vertex_count(); }

  private:
    friend LabeledTree certify_tree(const Graph& g);
    explicit LabeledTree(Graph g) : g_(std::move(g)) {}
    Graph g_;
};

// Throws NotATreeError naming the failed property (disconnected / cycle found).
LabeledTree certify_tree(const Graph& g);

struct PruferSequence {
    std::vector<Vertex> entries;  // length n-2, entries in [0, n)
    bool operator==(const PruferSequence&) const = default;
};

// Standard Prüfer decoding; bijective with labeled trees on n >= 2 vertices.
LabeledTree tree_from_prufer(const PruferSequence& seq, int n);
PruferSequence prufer_from_tree(const LabeledTree& t);

// Uniform over the n^(n-2) labeled trees; a deterministic function of (n, seed).
LabeledTree random_tree(int n, std::uint64_t seed);

// Visits every labeled tree on n >= 2 vertices exactly once, in Prüfer order.
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    if (n < 2) throw std::invalid_argument("for_each_labeled_tree: need n >= 2");
    PruferSequence seq;
    seq.entries.assign(n - 2, 0);
    for (;;) {
        fn(tree_from_prufer(seq, n));
        int pos = 0;
        while (pos < n - 2 && ++seq.entries[pos] == n) seq.entries[pos++] = 0;
        if (pos == n - 2) break;
    }
}

}  // namespace degchrom

#endif
