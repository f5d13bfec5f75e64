#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hpart/graph.hpp"

namespace hpart {

/// A height function paired with its degree budget r.
///
/// The evaluator receives a graph and a member set D such that G[D] is
/// connected and nonempty, and must depend only on G[D] (deterministic; the
/// builtins are also isomorphism-invariant). Values on disconnected vertex
/// sets are defined by summing over components, see height_of().
class HeightFunction {
public:
    using Evaluator = std::function<std::uint64_t(const Graph&, const VertexSet&)>;

    HeightFunction(std::string name, std::size_t budget, Evaluator evaluator);

    const std::string& name() const { return name_; }
    std::size_t budget() const { return budget_; }

    // Value on the connected induced subgraph G[component].
    std::uint64_t operator()(const Graph& g, const VertexSet& component) const
    {
        return evaluator_(g, component);
    }

    // Value on a connected graph.
    std::uint64_t operator()(const Graph& g) const { return evaluator_(g, g.vertices()); }

private:
    std::string name_;
    std::size_t budget_;
    Evaluator evaluator_;
};

// h ≡ 0. Valid for every budget, including 0 and 1.
HeightFunction zero_height(std::size_t r);

// 1 on non-complete r-regular graphs, 0 elsewhere. Requires r >= 2.
HeightFunction noncomplete_regular_height(std::size_t r);

/// Look up a registered height by name: "zero" or "regular".
/// Throws InputError for unknown names and ContractError for "regular" with r < 2.
HeightFunction make_height(const std::string& name, std::size_t r);

std::vector<std::string> registered_heights();

/// Sum of h over the components of G[S]; 0 for empty S.
std::uint64_t height_of(const HeightFunction& h, const Graph& g, const VertexSet& s);

/// h-critical vertices x of the connected graph G[D] with d_D(x) >= min_degree,
/// ascending. A vertex is critical when G[D - x] is connected (and nonempty)
/// and h(G[D - x]) < h(G[D]). Throws ContractError if G[D] is not connected.
std::vector<Vertex> critical_vertices(const HeightFunction& h, const Graph& g, const VertexSet& d,
                                      std::size_t min_degree = 0);

std::vector<Vertex> critical_vertices(const HeightFunction& h, const Graph& g, std::size_t min_degree = 0);

/// True iff {x, y} is an h-critical pair in the connected graph G[Q]:
/// G[Q - {x, y}] is connected and nonempty, x is critical in G[Q - y] and y is
/// critical in G[Q - x]. Throws ContractError if x == y or G[Q] is disconnected.
bool is_critical_pair(const HeightFunction& h, const Graph& g, const VertexSet& q, Vertex x, Vertex y);

bool is_critical_pair(const HeightFunction& h, const Graph& g, Vertex x, Vertex y);

} // namespace hpart
