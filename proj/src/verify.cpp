#include "hpart/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "hpart/errors.hpp"

namespace hpart {

const char* to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::degree: return "degree";
    case ViolationKind::height: return "height";
    case ViolationKind::cover: return "cover";
    }
    return "?";
}

namespace {

void check_parts(const Problem& problem, const std::vector<VertexSet>& sets, ValidationReport& report)
{
    const auto& g = problem.graph();
    for (std::size_t i = 0; i < sets.size() && i < problem.parts(); ++i) {
        const auto r = problem.budget(i);
        sets[i].for_each([&](Vertex v) {
            const auto d = degree_in(g, v, sets[i]);
            if (d > r)
                report.violations.push_back({ViolationKind::degree, i, {v},
                                             "vertex has " + std::to_string(d) + " neighbors in its part, budget is " +
                                                 std::to_string(r)});
        });
        for (const auto& comp : components(g, sets[i])) {
            const auto value = problem.height(i)(g, comp);
            if (value > 0)
                report.violations.push_back({ViolationKind::height, i, comp.to_vector(),
                                             "component has height " + std::to_string(value) + " under '" +
                                                 problem.height(i).name() + "'"});
        }
    }
}

} // namespace

ValidationReport verify_partition(const Problem& problem, const std::vector<std::vector<Vertex>>& parts)
{
    ValidationReport report;
    const auto n = problem.graph().order();
    if (parts.size() != problem.parts())
        report.violations.push_back({ViolationKind::cover, 0, {},
                                     "document has " + std::to_string(parts.size()) + " parts, problem has " +
                                         std::to_string(problem.parts())});

    std::vector<VertexSet> sets(parts.size(), VertexSet(n));
    VertexSet seen(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i]) {
            if (v >= n) {
                report.violations.push_back({ViolationKind::cover, i, {v}, "vertex does not exist in the graph"});
                continue;
            }
            if (seen.contains(v)) {
                report.violations.push_back({ViolationKind::cover, i, {v}, "vertex listed more than once"});
                continue;
            }
            seen.insert(v);
            sets[i].insert(v);
        }
    (VertexSet::full(n) - seen).for_each([&](Vertex v) {
        report.violations.push_back({ViolationKind::cover, 0, {v}, "vertex is not assigned to any part"});
    });

    check_parts(problem, sets, report);
    report.ok = report.violations.empty();
    return report;
}

ValidationReport verify_partition(const Problem& problem, const Partition& partition)
{
    std::vector<std::vector<Vertex>> parts;
    for (const auto& set : partition.part_sets())
        parts.push_back(set.to_vector());
    if (partition.order() != problem.graph().order()) {
        ValidationReport report;
        report.violations.push_back({ViolationKind::cover, 0, {},
                                     "partition covers " + std::to_string(partition.order()) +
                                         " vertices, graph has " + std::to_string(problem.graph().order())});
        report.ok = false;
        return report;
    }
    return verify_partition(problem, parts);
}

bool is_valid_partition(const Problem& problem, const Partition& partition)
{
    if (partition.parts() != problem.parts() || partition.order() != problem.graph().order())
        return false;
    const auto& g = problem.graph();
    for (std::size_t i = 0; i < problem.parts(); ++i)
        if (max_degree_within(g, partition.part(i)) > problem.budget(i))
            return false;
    for (std::size_t i = 0; i < problem.parts(); ++i)
        for (const auto& comp : components(g, partition.part(i)))
            if (problem.height(i)(g, comp) > 0)
                return false;
    return true;
}

std::optional<Partition> brute_force_exists(const Problem& problem, std::uint64_t cap)
{
    const auto& g = problem.graph();
    const auto n = g.order();
    const auto k = problem.parts();

    std::uint64_t space = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (space > cap / k)
            throw SizeError("brute force over " + std::to_string(k) + "^" + std::to_string(n) +
                            " assignments exceeds the cap of " + std::to_string(cap));
        space *= k;
    }
    if (space > cap)
        throw SizeError("brute force space exceeds the cap of " + std::to_string(cap));

    // Depth-first in lexicographic order. A prefix in which some assigned
    // vertex already exceeds its part's budget has no valid completion, so
    // pruning it keeps the first witness unchanged.
    std::vector<std::size_t> assign(n, 0);
    std::vector<std::size_t> inner(n, 0); // neighbors in own part among vertices < depth
    std::vector<VertexSet> sets(k, VertexSet(n));

    auto heights_ok = [&]() {
        for (std::size_t i = 0; i < k; ++i)
            for (const auto& comp : components(g, sets[i]))
                if (problem.height(i)(g, comp) > 0)
                    return false;
        return true;
    };

    std::function<bool(std::size_t)> descend = [&](std::size_t v) -> bool {
        if (v == n)
            return heights_ok();
        const auto vertex = static_cast<Vertex>(v);
        for (std::size_t j = 0; j < k; ++j) {
            const auto r = problem.budget(j);
            const auto mates = g.neighbors(vertex) & sets[j];
            if (mates.size() > r)
                continue;
            bool overflow = false;
            mates.for_each([&](Vertex u) { overflow = overflow || inner[u] + 1 > r; });
            if (overflow)
                continue;

            assign[v] = j;
            inner[v] = mates.size();
            mates.for_each([&](Vertex u) { ++inner[u]; });
            sets[j].insert(vertex);
            if (descend(v + 1))
                return true;
            sets[j].erase(vertex);
            mates.for_each([&](Vertex u) { --inner[u]; });
        }
        return false;
    };

    if (!descend(0))
        return std::nullopt;
    return Partition::from_assignment(k, assign);
}

namespace {

constexpr std::size_t max_mask_order = 11; // n(n-1)/2 <= 64

std::vector<std::pair<unsigned, unsigned>> vertex_pairs(std::size_t n)
{
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

bool rows_connected(const std::array<std::uint32_t, max_mask_order>& rows, std::size_t n)
{
    const std::uint32_t all = (n == 32) ? ~0U : ((1U << n) - 1);
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (auto bits = frontier; bits != 0; bits &= bits - 1)
            next |= rows[static_cast<std::size_t>(std::countr_zero(bits))];
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

// Encoding of the graph after relabeling by perm: bit p of the result is set
// iff the p-th pair (in vertex_pairs order) is an edge. Smaller is "more canonical".
std::uint64_t encode(const std::array<std::uint32_t, max_mask_order>& rows,
                     const std::vector<std::pair<unsigned, unsigned>>& pairs, const std::vector<unsigned>& perm)
{
    // perm maps new label -> old label.
    std::uint64_t code = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto a = perm[pairs[p].first];
        const auto b = perm[pairs[p].second];
        if (((rows[a] >> b) & 1U) != 0)
            code |= std::uint64_t{1} << (pairs.size() - 1 - p);
    }
    return code;
}

std::uint64_t canonical_code(const std::array<std::uint32_t, max_mask_order>& rows, std::size_t n,
                             const std::vector<std::pair<unsigned, unsigned>>& pairs)
{
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    auto best = encode(rows, pairs, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, encode(rows, pairs, perm));
    return best;
}

void check_enumerable(std::size_t n, std::size_t n_max)
{
    if (n > n_max || n > max_mask_order)
        throw SizeError("cannot enumerate graphs on " + std::to_string(n) + " vertices (limit " +
                        std::to_string(std::min(n_max, max_mask_order)) + ")");
}

} // namespace

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit, bool up_to_isomorphism,
                              std::size_t n_max)
{
    check_enumerable(n, n_max);
    if (n == 0)
        return;
    const auto pairs = vertex_pairs(n);
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    std::set<std::uint64_t> seen_classes;
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        // Each of the n - 1 vertices past 0 needs an edge; cheap reject.
        if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n)
            continue;
        std::array<std::uint32_t, max_mask_order> rows{};
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (((mask >> p) & 1U) != 0) {
                rows[pairs[p].first] |= 1U << pairs[p].second;
                rows[pairs[p].second] |= 1U << pairs[p].first;
            }
        if (!rows_connected(rows, n))
            continue;
        if (up_to_isomorphism && !seen_classes.insert(canonical_code(rows, n, pairs)).second)
            continue;
        edges.clear();
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (((mask >> p) & 1U) != 0)
                edges.emplace_back(pairs[p].first, pairs[p].second);
        visit(Graph::from_edge_list(n, edges));
    }
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n, bool up_to_isomorphism, std::size_t n_max)
{
    std::vector<Graph> out;
    for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); }, up_to_isomorphism, n_max);
    return out;
}

std::vector<bool> canonical_encoding(const Graph& g)
{
    const auto n = g.order();
    check_enumerable(n, max_mask_order);
    std::array<std::uint32_t, max_mask_order> rows{};
    for (const auto& [u, v] : g.edges()) {
        rows[u] |= 1U << v;
        rows[v] |= 1U << u;
    }
    const auto pairs = vertex_pairs(n);
    const auto code = canonical_code(rows, n, pairs);
    std::vector<bool> out(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p)
        out[p] = ((code >> (pairs.size() - 1 - p)) & 1U) != 0;
    return out;
}

AxiomReport check_height_properties(const HeightFunction& h, std::size_t r, std::size_t n_max)
{
    AxiomReport report;
    std::array<bool, 5> reported{};

    auto fail = [&](int property, const Graph& g, std::vector<Vertex> vertices, std::string detail) {
        if (reported[static_cast<std::size_t>(property)])
            return;
        reported[static_cast<std::size_t>(property)] = true;
        report.failures.push_back({property, g.order(), g.edges(), std::move(vertices), std::move(detail)});
    };

    for (std::size_t n = 1; n <= n_max && report.failures.empty(); ++n) {
        for_each_connected_graph(
            n,
            [&](const Graph& g) {
                const auto all = g.vertices();
                const auto value = h(g);

                // Heights of G - v for every v whose deletion stays in 𝒢.
                std::vector<std::optional<std::uint64_t>> minus(n);
                for (Vertex v = 0; v < n; ++v) {
                    auto rest = all;
                    rest.erase(v);
                    if (is_connected(g, rest))
                        minus[v] = h(g, rest);
                }
                std::vector<Vertex> strong; // critical with d(x) >= r
                for (Vertex v = 0; v < n; ++v)
                    if (minus[v] && *minus[v] < value && g.degree(v) >= r)
                        strong.push_back(v);

                if (value > 0 && strong.empty())
                    fail(1, g, {}, "h(G) = " + std::to_string(value) + " but no critical vertex has degree >= r");
                for (Vertex x : strong) {
                    if (*minus[x] + 1 != value)
                        fail(2, g, {x},
                             "h(G - x) = " + std::to_string(*minus[x]) + ", h(G) = " + std::to_string(value));
                    const bool has_far = std::any_of(strong.begin(), strong.end(), [&](Vertex y) {
                        return y != x && !g.adjacent(x, y);
                    });
                    if (!has_far)
                        fail(3, g, {x}, "no critical vertex of degree >= r outside {x} ∪ N(x)");
                }

                for (Vertex x = 0; x < n; ++x)
                    for (Vertex y = x + 1; y < n; ++y) {
                        if (!minus[x] || !minus[y] || *minus[x] == 0 || *minus[y] == 0)
                            continue; // x critical in G - y needs h(G - y) > 0
                        auto without_x = all;
                        without_x.erase(x);
                        auto without_y = all;
                        without_y.erase(y);
                        if (degree_in(g, x, without_y) < r || degree_in(g, y, without_x) < r)
                            continue;
                        if (!is_critical_pair(h, g, x, y))
                            continue;
                        bool found = false;
                        (g.neighbors(x) & g.neighbors(y)).for_each([&](Vertex z) {
                            found = found || g.degree(z) >= r + 1;
                        });
                        if (!found)
                            fail(4, g, {x, y}, "critical pair has no common neighbor of degree >= r + 1");
                    }
            },
            false, std::max(n_max, n));
    }
    report.ok = report.failures.empty();
    return report;
}

} // namespace hpart
