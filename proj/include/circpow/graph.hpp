#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circpow/bitset.hpp"
#include "circpow/errors.hpp"

namespace circpow {

using VertexSet = Bitset;
using EdgeList = std::vector<std::pair<int, int>>;

// Finite simple undirected graph. Immutable after construction; every
// operation below is a pure function returning a fresh graph, so values can
// be shared freely across threads.
//
// Constructors that produce vertex-transitive families tag the graph; the
// homomorphism engine only applies its symmetry cut to tagged targets.
class Graph {
public:
    Graph() = default;
    Graph(int order, const EdgeList& edges, std::vector<std::string> labels = {},
          std::string name = {}, bool vertex_transitive = false);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const { return num_edges_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& row(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    // Edge list with u < v, lexicographically sorted.
    EdgeList edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const { return labels_.empty() ? std::string() : labels_[v]; }

    const std::string& name() const { return name_; }
    Graph renamed(std::string name) const {
        Graph g = *this;
        g.name_ = std::move(name);
        return g;
    }

    bool vertex_transitive() const { return vertex_transitive_; }

    // Structural equality: order, adjacency and labels. Names are metadata.
    bool operator==(const Graph& o) const {
        return rows_ == o.rows_ && labels_ == o.labels_;
    }

private:
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
    std::string name_;
    int num_edges_ = 0;
    bool vertex_transitive_ = false;
};

// Validates endpoints, rejects self-loops, collapses duplicate pairs.
Graph make_graph(int order, const EdgeList& edges, std::vector<std::string> labels = {});

// kth walk power: u ~ v iff a walk of length exactly k joins them, u != v.
// Throws LoopCreatedError if any vertex carries a closed k-walk (for odd k
// this means k >= odd girth; for even k it happens whenever G has an edge).
Graph walk_power(const Graph& g, int k);

// N_i(v): endpoints of walks of length exactly i from v. N_0(v) = {v}.
VertexSet walk_neighborhood(const Graph& g, int v, int steps);

// Length of a shortest odd cycle; nullopt iff bipartite.
std::optional<int> odd_girth(const Graph& g);

struct Subgraph {
    Graph graph;
    // original_vertex[i] = index the i-th surviving vertex had in the input,
    // for translating certificates back.
    std::vector<int> original_vertex;
};

// Deletes the listed vertices and edges; remaining vertices are reindexed
// densely, preserving order. Throws GraphError for missing vertices/edges.
Subgraph remove(const Graph& g, const std::vector<int>& vertices, const EdgeList& edges);

inline Graph remove_edge(const Graph& g, int u, int v) {
    return remove(g, {}, {{u, v}}).graph;
}

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Exact isomorphism test by degree/neighborhood refinement plus
// backtracking. Meant for desk-scale graphs; aborts with TimeoutError once
// the budget runs out.
bool are_isomorphic(const Graph& a, const Graph& b, double budget_seconds = 60.0);

} // namespace circpow
