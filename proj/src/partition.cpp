#include "hpart/partition.hpp"

#include <numeric>
#include <random>
#include <string>

#include "hpart/errors.hpp"

namespace hpart {

Partition::Partition(std::size_t n, std::size_t k) : assign_(n, 0), sets_(k, VertexSet(n))
{
    if (k == 0)
        throw ContractError("a partition needs at least one part");
    if (n > 0)
        sets_[0] = VertexSet::full(n);
}

Partition Partition::round_robin(std::size_t n, std::size_t k)
{
    std::vector<std::size_t> assignment(n);
    for (std::size_t v = 0; v < n; ++v)
        assignment[v] = k == 0 ? 0 : v % k;
    return from_assignment(k, std::move(assignment));
}

Partition Partition::random(std::size_t n, std::size_t k, std::uint64_t seed)
{
    if (k == 0)
        throw ContractError("a partition needs at least one part");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    std::vector<std::size_t> assignment(n);
    for (auto& a : assignment)
        a = pick(rng);
    return from_assignment(k, std::move(assignment));
}

Partition Partition::from_assignment(std::size_t k, std::vector<std::size_t> assignment)
{
    if (k == 0)
        throw ContractError("a partition needs at least one part");
    Partition p;
    const auto n = assignment.size();
    p.sets_.assign(k, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v) {
        if (assignment[v] >= k)
            throw ContractError("vertex " + std::to_string(v) + " assigned to part " +
                                std::to_string(assignment[v]) + " of " + std::to_string(k));
        p.sets_[assignment[v]].insert(static_cast<Vertex>(v));
    }
    p.assign_ = std::move(assignment);
    return p;
}

void Partition::move(Vertex v, std::size_t to)
{
    sets_[assign_[v]].erase(v);
    sets_[to].insert(v);
    assign_[v] = to;
}

Problem::Problem(Graph graph, std::vector<std::size_t> budgets, std::vector<HeightFunction> heights)
    : graph_(std::move(graph)), budgets_(std::move(budgets)), heights_(std::move(heights))
{
    if (budgets_.empty())
        throw ContractError("a problem needs at least one part");
    if (budgets_.size() != heights_.size())
        throw ContractError("got " + std::to_string(budgets_.size()) + " budgets but " +
                            std::to_string(heights_.size()) + " height functions");
    for (std::size_t i = 0; i < budgets_.size(); ++i)
        if (heights_[i].budget() != budgets_[i])
            throw ContractError("height function for part " + std::to_string(i + 1) + " has budget " +
                                std::to_string(heights_[i].budget()) + ", part budget is " +
                                std::to_string(budgets_[i]));
}

Problem Problem::with_zero_heights(Graph graph, std::vector<std::size_t> budgets)
{
    std::vector<HeightFunction> heights;
    heights.reserve(budgets.size());
    for (auto r : budgets)
        heights.push_back(zero_height(r));
    return Problem(std::move(graph), std::move(budgets), std::move(heights));
}

long long Problem::budget_sum() const
{
    return std::accumulate(budgets_.begin(), budgets_.end(), 0LL,
                           [](long long acc, std::size_t r) { return acc + static_cast<long long>(r); });
}

long long f_value(const Problem& problem, const Partition& partition)
{
    long long f = 0;
    for (std::size_t i = 0; i < problem.parts(); ++i) {
        const auto& part = partition.part(i);
        f += static_cast<long long>(edges_within(problem.graph(), part)) -
             static_cast<long long>(problem.budget(i)) * static_cast<long long>(part.size());
    }
    return f;
}

Potential potential(const Problem& problem, const Partition& partition)
{
    Potential p;
    p.f = f_value(problem, partition);
    for (std::size_t i = 0; i < problem.parts(); ++i)
        for (const auto& comp : components(problem.graph(), partition.part(i))) {
            ++p.c;
            p.h += problem.height(i)(problem.graph(), comp);
        }
    return p;
}

} // namespace hpart
