#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hpart/graph.hpp"
#include "hpart/heights.hpp"

namespace hpart {

/// Assignment of every vertex to one of k parts. Parts are 0-based here;
/// external documents number them from 1.
class Partition {
public:
    Partition() = default;

    // Every vertex in part 0.
    Partition(std::size_t n, std::size_t k);

    // Vertex v goes to part v mod k.
    static Partition round_robin(std::size_t n, std::size_t k);

    // Uniform random assignment from a seeded mt19937_64.
    static Partition random(std::size_t n, std::size_t k, std::uint64_t seed);

    // Throws ContractError if an entry is >= k or k == 0.
    static Partition from_assignment(std::size_t k, std::vector<std::size_t> assignment);

    std::size_t parts() const { return sets_.size(); }
    std::size_t order() const { return assign_.size(); }

    std::size_t part_of(Vertex v) const { return assign_[v]; }
    const VertexSet& part(std::size_t i) const { return sets_[i]; }
    const std::vector<VertexSet>& part_sets() const { return sets_; }
    const std::vector<std::size_t>& assignment() const { return assign_; }

    void move(Vertex v, std::size_t to);

    bool operator==(const Partition& other) const { return assign_ == other.assign_ && parts() == other.parts(); }

private:
    std::vector<std::size_t> assign_;
    std::vector<VertexSet> sets_;
};

/// A partitioning instance: graph, budgets r_1..r_k and one height per part.
class Problem {
public:
    // Throws ContractError when k == 0, the lists differ in length, or
    // heights[i].budget() != budgets[i].
    Problem(Graph graph, std::vector<std::size_t> budgets, std::vector<HeightFunction> heights);

    // Every part gets zero_height.
    static Problem with_zero_heights(Graph graph, std::vector<std::size_t> budgets);

    const Graph& graph() const { return graph_; }
    std::size_t parts() const { return budgets_.size(); }
    std::size_t budget(std::size_t i) const { return budgets_[i]; }
    const std::vector<std::size_t>& budgets() const { return budgets_; }
    const HeightFunction& height(std::size_t i) const { return heights_[i]; }
    const std::vector<HeightFunction>& heights() const { return heights_; }

    long long budget_sum() const;

private:
    Graph graph_;
    std::vector<std::size_t> budgets_;
    std::vector<HeightFunction> heights_;
};

/// The lexicographic key (f, c, h) of a partition.
struct Potential {
    long long f = 0;     // Σ_i (|E(G[V_i])| - r_i |V_i|)
    std::size_t c = 0;   // Σ_i c(G[V_i])
    std::uint64_t h = 0; // Σ_i h_i(G[V_i])

    auto operator<=>(const Potential&) const = default;
};

Potential potential(const Problem& problem, const Partition& partition);

// f alone, without component or height evaluation.
long long f_value(const Problem& problem, const Partition& partition);

} // namespace hpart
