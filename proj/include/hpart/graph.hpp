#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hpart/vertex_set.hpp"

namespace hpart {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Immutable once built. Each vertex keeps its neighborhood as a VertexSet
/// over the whole vertex range, so N_D(x) and d_D(x) are a single bitwise
/// AND away for any D.
class Graph {
public:
    // The empty graph on zero vertices.
    Graph() = default;

    // Throws InputError on self-loops or endpoints >= n. Duplicate pairs
    // (in either orientation) collapse to one edge.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return neighbors_.size(); }
    std::size_t size() const { return edge_count_; }

    const VertexSet& neighbors(Vertex v) const { return neighbors_[v]; }
    std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return neighbors_[u].contains(v); }

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    // Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

private:
    std::vector<VertexSet> neighbors_;
    std::size_t edge_count_ = 0;
};

/// G[S] relabeled onto 0..|S|-1 in ascending order of original id.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

// d_D(x) = |N(x) ∩ D|.
inline std::size_t degree_in(const Graph& g, Vertex x, const VertexSet& d)
{
    return g.neighbors(x).intersection_size(d);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Number of edges of G with both ends in S.
std::size_t edges_within(const Graph& g, const VertexSet& s);

// Maximum of d_S(v) over v in S (0 for empty S).
std::size_t max_degree_within(const Graph& g, const VertexSet& s);

/// Components of G[S] as sets of original ids, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

// The component of G[S] containing v (v must lie in S).
VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v);

// True iff G[S] is nonempty and connected.
bool is_connected(const Graph& g, const VertexSet& s);

// The zero-vertex graph is not connected.
bool is_connected(const Graph& g);

std::size_t max_degree(const Graph& g);

} // namespace hpart
