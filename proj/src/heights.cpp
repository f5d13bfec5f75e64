#include "hpart/heights.hpp"

#include "hpart/errors.hpp"

namespace hpart {

HeightFunction::HeightFunction(std::string name, std::size_t budget, Evaluator evaluator)
    : name_(std::move(name)), budget_(budget), evaluator_(std::move(evaluator))
{
    if (!evaluator_)
        throw ContractError("height function '" + name_ + "' has no evaluator");
}

HeightFunction zero_height(std::size_t r)
{
    return HeightFunction("zero", r, [](const Graph&, const VertexSet&) { return std::uint64_t{0}; });
}

HeightFunction noncomplete_regular_height(std::size_t r)
{
    if (r < 2)
        throw ContractError("the 'regular' height is only defined for r >= 2 (got r = " + std::to_string(r) +
                            "); use 'zero' for smaller budgets");
    return HeightFunction("regular", r, [r](const Graph& g, const VertexSet& d) -> std::uint64_t {
        const auto n = d.size();
        bool regular = true;
        std::size_t twice_edges = 0;
        d.for_each([&](Vertex v) {
            const auto deg = degree_in(g, v, d);
            regular = regular && deg == r;
            twice_edges += deg;
        });
        const bool complete = twice_edges == n * (n - 1);
        return regular && !complete ? 1 : 0;
    });
}

HeightFunction make_height(const std::string& name, std::size_t r)
{
    if (name == "zero")
        return zero_height(r);
    if (name == "regular")
        return noncomplete_regular_height(r);
    throw InputError("unknown height function '" + name + "' (known: zero, regular)");
}

std::vector<std::string> registered_heights() { return {"zero", "regular"}; }

std::uint64_t height_of(const HeightFunction& h, const Graph& g, const VertexSet& s)
{
    std::uint64_t total = 0;
    for (const auto& comp : components(g, s))
        total += h(g, comp);
    return total;
}

std::vector<Vertex> critical_vertices(const HeightFunction& h, const Graph& g, const VertexSet& d,
                                      std::size_t min_degree)
{
    if (!is_connected(g, d))
        throw ContractError("critical_vertices needs a connected graph");
    std::vector<Vertex> out;
    const auto whole = h(g, d);
    if (whole == 0)
        return out;
    d.for_each([&](Vertex x) {
        if (degree_in(g, x, d) < min_degree)
            return;
        auto rest = d;
        rest.erase(x);
        if (is_connected(g, rest) && h(g, rest) < whole)
            out.push_back(x);
    });
    return out;
}

std::vector<Vertex> critical_vertices(const HeightFunction& h, const Graph& g, std::size_t min_degree)
{
    return critical_vertices(h, g, g.vertices(), min_degree);
}

namespace {

bool critical_in(const HeightFunction& h, const Graph& g, const VertexSet& d, Vertex x)
{
    auto rest = d;
    rest.erase(x);
    return is_connected(g, rest) && h(g, rest) < h(g, d);
}

} // namespace

bool is_critical_pair(const HeightFunction& h, const Graph& g, const VertexSet& q, Vertex x, Vertex y)
{
    if (x == y)
        throw ContractError("a critical pair needs two distinct vertices");
    if (!q.contains(x) || !q.contains(y))
        throw ContractError("critical pair vertices must lie in the graph");
    if (!is_connected(g, q))
        throw ContractError("is_critical_pair needs a connected graph");

    auto without_both = q;
    without_both.erase(x);
    without_both.erase(y);
    if (!is_connected(g, without_both))
        return false;
    auto without_y = q;
    without_y.erase(y);
    auto without_x = q;
    without_x.erase(x);
    // Criticality is only defined inside members of 𝒢, so Q - y and Q - x must be connected too.
    return is_connected(g, without_y) && is_connected(g, without_x) && critical_in(h, g, without_y, x) &&
           critical_in(h, g, without_x, y);
}

bool is_critical_pair(const HeightFunction& h, const Graph& g, Vertex x, Vertex y)
{
    return is_critical_pair(h, g, g.vertices(), x, y);
}

} // namespace hpart
