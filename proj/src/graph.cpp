#include "degchrom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "degchrom/rng.hpp"

namespace degchrom {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    std::set<std::pair<Vertex, Vertex>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw std::invalid_argument("Graph: duplicate edge");
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end());
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool parse_long(const std::string& token, long long& out) {
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokenizer(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (tokenizer >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;

        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "n")
                throw ParseError(lineno, "bad header, expected \"n <count>\"");
            long long count = 0;
            if (!parse_long(tokens[1], count) || count < 0)
                throw ParseError(lineno, "bad header, vertex count must be a non-negative integer");
            if (count > std::numeric_limits<int>::max())
                throw ParseError(lineno, "bad header, vertex count too large");
            n = count;
            have_header = true;
            continue;
        }

        if (tokens.size() != 2) throw ParseError(lineno, "expected \"<u> <v>\"");
        long long u = 0;
        long long v = 0;
        if (!parse_long(tokens[0], u) || !parse_long(tokens[1], v))
            throw ParseError(lineno, "non-integer token");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "self-loop");
        auto a = static_cast<Vertex>(std::min(u, v));
        auto b = static_cast<Vertex>(std::max(u, v));
        if (!seen.insert({a, b}).second) throw ParseError(lineno, "duplicate edge");
        edges.push_back({a, b});
    }
    if (!have_header) throw ParseError(lineno, "bad header, missing \"n <count>\" line");
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

LabeledTree certify_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        throw NotATreeError(NotATreeError::Reason::Disconnected,
                            "not a tree: disconnected (empty graph)");
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        const Vertex v = frontier.front();
        frontier.pop();
        for (Vertex u : g.neighbors(v)) {
            if (!visited[u]) {
                visited[u] = 1;
                ++reached;
                frontier.push(u);
            }
        }
    }
    if (reached < n)
        throw NotATreeError(NotATreeError::Reason::Disconnected,
                            "not a tree: disconnected (" + std::to_string(reached) + " of " +
                                std::to_string(n) + " vertices reachable)");
    if (g.edge_count() != n - 1)
        throw NotATreeError(NotATreeError::Reason::CycleFound, "not a tree: cycle found");
    return LabeledTree(g);
}

LabeledTree tree_from_prufer(const PruferSequence& seq, int n) {
    if (n < 2) throw std::invalid_argument("tree_from_prufer: need n >= 2");
    if (static_cast<int>(seq.entries.size()) != n - 2)
        throw std::invalid_argument("tree_from_prufer: sequence length " +
                                    std::to_string(seq.entries.size()) + ", expected " +
                                    std::to_string(n - 2));
    for (Vertex v : seq.entries)
        if (v < 0 || v >= n)
            throw std::out_of_range("tree_from_prufer: entry " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (Vertex v : seq.entries) ++degree[v];

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<Vertex>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (Vertex s : seq.entries) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, s});
        --degree[leaf];
        if (--degree[s] == 1) leaves.push(s);
    }
    const Vertex u = leaves.top();
    leaves.pop();
    const Vertex v = leaves.top();
    edges.push_back({u, v});
    return certify_tree(Graph(n, std::move(edges)));
}

PruferSequence prufer_from_tree(const LabeledTree& t) {
    const Graph& g = t.graph();
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("prufer_from_tree: need n >= 2");

    std::vector<int> degree(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<Vertex>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    PruferSequence seq;
    seq.entries.reserve(static_cast<std::size_t>(n - 2));
    while (static_cast<int>(seq.entries.size()) < n - 2) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        removed[leaf] = 1;
        Vertex parent = -1;
        for (Vertex u : g.neighbors(leaf)) {
            if (!removed[u]) {
                parent = u;
                break;
            }
        }
        seq.entries.push_back(parent);
        if (--degree[parent] == 1) leaves.push(parent);
    }
    return seq;
}

LabeledTree random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_tree: need n >= 2");
    SplitMix64 gen(seed);
    PruferSequence seq;
    seq.entries.reserve(static_cast<std::size_t>(n - 2));
    for (int i = 0; i < n - 2; ++i)
        seq.entries.push_back(static_cast<Vertex>(gen.next_below(static_cast<std::uint64_t>(n))));
    return tree_from_prufer(seq, n);
}

}  // namespace degchrom
