#include "hpart/graph.hpp"

#include <algorithm>
#include <string>

#include "hpart/errors.hpp"

namespace hpart {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges)
{
    Graph g;
    g.neighbors_.assign(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        if (g.neighbors_[u].contains(v))
            continue;
        g.neighbors_[u].insert(v);
        g.neighbors_[v].insert(u);
        ++g.edge_count_;
    }
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        neighbors_[u].for_each([&](Vertex v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    InducedSubgraph result;
    s.for_each([&](Vertex v) {
        if (v >= g.order())
            throw ContractError("vertex " + std::to_string(v) + " is not in the graph");
        result.original.push_back(v);
    });
    std::vector<Vertex> relabel(g.order(), 0);
    for (std::size_t i = 0; i < result.original.size(); ++i)
        relabel[result.original[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (Vertex u : result.original)
        (g.neighbors(u) & s).for_each([&](Vertex v) {
            if (u < v)
                edges.emplace_back(relabel[u], relabel[v]);
        });
    result.graph = Graph::from_edge_list(result.original.size(), edges);
    return result;
}

std::size_t edges_within(const Graph& g, const VertexSet& s)
{
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += degree_in(g, v, s); });
    return twice / 2;
}

std::size_t max_degree_within(const Graph& g, const VertexSet& s)
{
    std::size_t best = 0;
    s.for_each([&](Vertex v) { best = std::max(best, degree_in(g, v, s)); });
    return best;
}

VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v)
{
    VertexSet seen(g.order());
    seen.insert(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](Vertex u) { next |= g.neighbors(u); });
        next &= s;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s)
{
    std::vector<VertexSet> out;
    VertexSet rest = s;
    while (auto v = rest.first()) {
        auto comp = component_of(g, rest, *v);
        rest -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g, const VertexSet& s)
{
    const auto v = s.first();
    return v && component_of(g, s, *v) == s;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::size_t max_degree(const Graph& g)
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

} // namespace hpart
