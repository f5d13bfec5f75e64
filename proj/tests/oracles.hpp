#pragma once

// Test-only reference computations. Everything here works from plain edge
// lists and loops, never through the library's bitset paths.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hpart/graph.hpp"
#include "hpart/heights.hpp"
#include "hpart/partition.hpp"

namespace hpart::testing {

inline Graph cycle(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edge_list(n, edges);
}

inline Graph path(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::from_edge_list(10, edges);
}

// Disjoint union, second graph's ids shifted past the first.
inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    auto edges = a.edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph::from_edge_list(a.order() + b.order(), edges);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edge_list(g.order(), edges);
}

inline std::size_t naive_degree_in(const Graph& g, Vertex x, const std::vector<bool>& member)
{
    std::size_t d = 0;
    for (const auto& [u, v] : g.edges()) {
        if (u == x && member[v])
            ++d;
        if (v == x && member[u])
            ++d;
    }
    return d;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

/// (f, c) of an assignment computed from the edge list and a union-find.
struct NaivePotential {
    long long f;
    std::size_t c;
};

inline NaivePotential naive_f_c(const Graph& g, const std::vector<std::size_t>& assign,
                                const std::vector<std::size_t>& budgets)
{
    NaivePotential out{0, 0};
    UnionFind uf(g.order());
    for (const auto& [u, v] : g.edges())
        if (assign[u] == assign[v]) {
            ++out.f;
            uf.unite(u, v);
        }
    for (std::size_t v = 0; v < g.order(); ++v) {
        out.f -= static_cast<long long>(budgets[assign[v]]);
        if (uf.find(v) == v)
            ++out.c;
    }
    return out;
}

/// Validity of an assignment checked edge by edge, with components from a
/// union-find; only the height values themselves come from the problem.
inline bool naive_valid(const Problem& problem, const std::vector<std::size_t>& assign)
{
    const auto& g = problem.graph();
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n, 0);
    UnionFind uf(n);
    for (const auto& [u, v] : g.edges())
        if (assign[u] == assign[v]) {
            ++deg[u];
            ++deg[v];
            uf.unite(u, v);
        }
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] > problem.budget(assign[v]))
            return false;
    for (std::size_t root = 0; root < n; ++root) {
        if (uf.find(root) != root)
            continue;
        VertexSet comp(n);
        for (Vertex v = 0; v < n; ++v)
            if (uf.find(v) == root)
                comp.insert(v);
        if (problem.height(assign[root])(g, comp) != 0)
            return false;
    }
    return true;
}

/// Every valid assignment, in lexicographic order with vertex 0 most
/// significant.
inline std::vector<std::vector<std::size_t>> all_witnesses(const Problem& problem)
{
    const std::size_t n = problem.graph().order();
    const std::size_t k = problem.parts();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> assign(n, 0);
    while (true) {
        if (naive_valid(problem, assign))
            out.push_back(assign);
        std::size_t pos = n;
        while (pos > 0 && assign[pos - 1] + 1 == k)
            assign[--pos] = 0;
        if (pos == 0)
            break;
        ++assign[pos - 1];
    }
    return out;
}

/// Number of connected labeled graphs on n vertices by inclusion-exclusion
/// over the size of the component containing vertex 0.
inline std::uint64_t connected_labeled_count(std::size_t n)
{
    std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
    }
    auto all_graphs = [](std::size_t m) { return std::uint64_t{1} << (m * (m - (m > 0 ? 1 : 0)) / 2); };
    std::vector<std::uint64_t> c(n + 1, 0);
    for (std::size_t m = 1; m <= n; ++m) {
        std::uint64_t disconnected = 0;
        for (std::size_t j = 1; j < m; ++j)
            disconnected += binom[m - 1][j - 1] * c[j] * all_graphs(m - j);
        c[m] = all_graphs(m) - disconnected;
    }
    return c[n];
}

} // namespace hpart::testing
