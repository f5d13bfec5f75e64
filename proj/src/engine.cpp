#include "hpart/engine.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hpart/errors.hpp"

namespace hpart {

const char* to_string(MoveKind kind)
{
    switch (kind) {
    case MoveKind::degree_fix: return "degree_fix";
    case MoveKind::shuffle: return "shuffle";
    case MoveKind::overload_evict: return "overload_evict";
    case MoveKind::isolation: return "isolation";
    case MoveKind::evict_x: return "evict_x";
    case MoveKind::insert_x_t: return "insert_x_t";
    case MoveKind::evict_z: return "evict_z";
    }
    return "?";
}

const char* to_string(CommitKind kind)
{
    switch (kind) {
    case CommitKind::degree_fix: return "degree_fix";
    case CommitKind::f_decrease: return "f_decrease";
    case CommitKind::c_decrease: return "c_decrease";
    case CommitKind::h_decrease: return "h_decrease";
    case CommitKind::isolation: return "isolation";
    case CommitKind::rearrangement: return "rearrangement";
    }
    return "?";
}

std::uint64_t default_step_budget(const Problem& problem)
{
    const auto n = static_cast<std::uint64_t>(problem.graph().order());
    const auto m = static_cast<std::uint64_t>(problem.graph().size());
    const auto rsum = static_cast<std::uint64_t>(problem.budget_sum());
    return 10 * n * n * (m + rsum * n + n + 1);
}

namespace {

void check_bound(const Problem& problem, long long slack, const char* which)
{
    const auto k = static_cast<long long>(problem.parts());
    const auto required = static_cast<long long>(max_degree(problem.graph())) + slack - k;
    const auto actual = problem.budget_sum();
    if (actual < required) {
        std::ostringstream msg;
        msg << which << " hypothesis fails: sum of budgets is " << actual << " but Δ(G) + " << slack
            << " - k = " << max_degree(problem.graph()) << " + " << slack << " - " << k << " = " << required;
        throw HypothesisError(msg.str(), required, actual);
    }
}

void check_shape(const Problem& problem, const Partition& partition)
{
    if (partition.parts() != problem.parts() || partition.order() != problem.graph().order())
        throw ContractError("partition shape (n = " + std::to_string(partition.order()) +
                            ", k = " + std::to_string(partition.parts()) + ") does not match the problem (n = " +
                            std::to_string(problem.graph().order()) + ", k = " +
                            std::to_string(problem.parts()) + ")");
}

std::string describe(const VertexSet& set)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    set.for_each([&](Vertex v) {
        out << (first ? "" : ",") << v;
        first = false;
    });
    out << '}';
    return out.str();
}

std::string describe(const ShuffleState& state)
{
    std::ostringstream out;
    for (std::size_t j = 0; j < state.history.size(); ++j) {
        const auto& step = state.history[j];
        out << "\n  step " << j + 1 << ": part " << step.part << ", x = " << step.moved
            << ", A = " << describe(step.component) << ", leftover = " << describe(step.leftover);
    }
    return out.str();
}

// Shared state of one engine invocation: step accounting and tracing.
class Runner {
public:
    Runner(const Problem& problem, const EngineOptions& options)
        : problem_(problem), graph_(problem.graph()), trace_(options.trace),
          budget_(options.step_budget.value_or(default_step_budget(problem)))
    {
    }

    Partition degree_fix(Partition p);
    Partition resolve(const Partition& p, std::size_t part, const VertexSet& component);
    Partition rearrange(const ShuffleState& state, std::size_t s);
    Partition run_main(Partition p);

    std::uint64_t steps() const { return steps_; }

private:
    // Apply a move, charge it against the budget and trace it.
    void move(Partition& p, Vertex v, std::size_t to, MoveKind kind, const Partition& committed);
    void commit(CommitKind kind, const Potential& before, const Potential& after, std::size_t shuffle_steps);
    std::size_t best_degree_fix_target(const Partition& p, Vertex v, std::size_t from) const;

    const Problem& problem_;
    const Graph& graph_;
    Trace* trace_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
};

void Runner::move(Partition& p, Vertex v, std::size_t to, MoveKind kind, const Partition& committed)
{
    if (steps_ >= budget_)
        throw BudgetError("step budget of " + std::to_string(budget_) + " moves exhausted", committed, steps_);
    ++steps_;
    const auto from = p.part_of(v);
    if (trace_ == nullptr) {
        p.move(v, to);
        return;
    }
    const auto before = potential(problem_, p);
    p.move(v, to);
    trace_->moves.push_back({kind, v, from, to, before, potential(problem_, p)});
}

void Runner::commit(CommitKind kind, const Potential& before, const Potential& after, std::size_t shuffle_steps)
{
    if (trace_ != nullptr)
        trace_->commits.push_back({kind, before, after, shuffle_steps});
}

std::size_t Runner::best_degree_fix_target(const Partition& p, Vertex v, std::size_t from) const
{
    std::optional<std::size_t> best;
    std::size_t best_degree = 0;
    for (std::size_t j = 0; j < problem_.parts(); ++j) {
        if (j == from)
            continue;
        const auto d = degree_in(graph_, v, p.part(j));
        if (d > problem_.budget(j))
            continue;
        if (!best || d < best_degree) {
            best = j;
            best_degree = d;
        }
    }
    if (!best)
        throw HypothesisError("vertex " + std::to_string(v) + " exceeds the budget of part " +
                                  std::to_string(from + 1) + " and no other part can take it",
                              0, 0);
    return *best;
}

Partition Runner::degree_fix(Partition p)
{
    const auto before = trace_ != nullptr ? potential(problem_, p) : Potential{};
    bool moved = false;
    for (;;) {
        std::optional<Vertex> violator;
        for (Vertex v = 0; v < graph_.order(); ++v) {
            const auto i = p.part_of(v);
            if (degree_in(graph_, v, p.part(i)) > problem_.budget(i)) {
                violator = v;
                break;
            }
        }
        if (!violator)
            break;
        const auto target = best_degree_fix_target(p, *violator, p.part_of(*violator));
        move(p, *violator, target, MoveKind::degree_fix, p);
        moved = true;
    }
    if (moved && trace_ != nullptr)
        commit(CommitKind::degree_fix, before, potential(problem_, p), 0);
    return p;
}

Partition Runner::resolve(const Partition& start, std::size_t first_part, const VertexSet& first_component)
{
    const auto start_potential = potential(problem_, start);
    ShuffleState state;
    Partition current = start;
    std::size_t part = first_part;
    VertexSet component = first_component;
    std::optional<Vertex> previous;

    for (;;) {
        const auto r = problem_.budget(part);
        auto candidates = critical_vertices(problem_.height(part), graph_, component, r);
        if (previous) {
            const auto& banned = graph_.neighbors(*previous);
            std::erase_if(candidates, [&](Vertex v) { return v == *previous || banned.contains(v); });
        }
        if (candidates.empty()) {
            std::ostringstream msg;
            msg << "height '" << problem_.height(part).name() << "' (r = " << r << ") has no critical vertex "
                << (previous ? "outside {x} ∪ N(x) for x = " + std::to_string(*previous) : std::string())
                << " with degree >= r in component " << describe(component) << " of part " << part + 1
                << (previous ? " (property 3)" : " (property 1)") << describe(state);
            throw HeightContractError(msg.str());
        }
        const Vertex x = candidates.front();

        const auto targets = find_targets(problem_, current, x, part);
        if (targets.empty())
            throw InternalError("critical vertex " + std::to_string(x) + " of part " + std::to_string(part + 1) +
                                " has no target part" + describe(state));
        const auto target = targets.front();
        const auto arrival_degree = degree_in(graph_, x, current.part(target));
        const auto target_budget = problem_.budget(target);

        auto leftover = component;
        leftover.erase(x);
        state.history.push_back({part, x, component, leftover, current});
        const auto steps_so_far = state.history.size();

        const bool isolation = arrival_degree == 0 && target_budget == 0;
        move(current, x, target, isolation ? MoveKind::isolation : MoveKind::shuffle, start);

        if (arrival_degree < target_budget) {
            commit(CommitKind::f_decrease, start_potential, potential(problem_, current), steps_so_far);
            return current;
        }

        if (isolation) {
            const auto after = potential(problem_, current);
            if (after.f != start_potential.f || after.c != start_potential.c + 1 ||
                after.h + 1 != start_potential.h)
                throw HeightContractError("isolating critical vertex " + std::to_string(x) + " changed (f, c, h) by (" +
                                          std::to_string(after.f - start_potential.f) + ", " +
                                          std::to_string(static_cast<long long>(after.c) -
                                                         static_cast<long long>(start_potential.c)) +
                                          ", " +
                                          std::to_string(static_cast<long long>(after.h) -
                                                         static_cast<long long>(start_potential.h)) +
                                          "), expected (0, +1, -1) (property 2)" + describe(state));
            commit(CommitKind::isolation, start_potential, after, steps_so_far);
            return current;
        }

        // Neutral arrival with d = r_target >= 1. A resident pushed over its
        // budget can leave for a strict f decrease.
        std::optional<Vertex> overloaded;
        (graph_.neighbors(x) & current.part(target)).for_each([&](Vertex y) {
            if (!overloaded && degree_in(graph_, y, current.part(target)) > target_budget)
                overloaded = y;
        });
        if (overloaded) {
            const auto evict_targets = find_targets(problem_, current, *overloaded, target);
            if (evict_targets.empty())
                throw InternalError("overloaded resident " + std::to_string(*overloaded) + " has no target part");
            move(current, *overloaded, evict_targets.front(), MoveKind::overload_evict, start);
            commit(CommitKind::f_decrease, start_potential, potential(problem_, current), steps_so_far);
            return current;
        }

        const auto after = potential(problem_, current);
        if (after < start_potential) {
            const auto kind = after.f < start_potential.f   ? CommitKind::f_decrease
                              : after.c < start_potential.c ? CommitKind::c_decrease
                                                            : CommitKind::h_decrease;
            commit(kind, start_potential, after, steps_so_far);
            return current;
        }
        if (after != start_potential)
            throw HeightContractError("moving critical vertex " + std::to_string(x) + " into part " +
                                      std::to_string(target + 1) + " raised the height of its new component by more "
                                      "than 1 (property 2)" + describe(state));

        // Potential unchanged: x joined exactly one component C of the target
        // part and A = C + x is bad. Stop at the first repeated leftover.
        auto next_component = component_of(graph_, current.part(target), x);
        auto arrived_next_to = next_component;
        arrived_next_to.erase(x);
        for (std::size_t s = 0; s + 1 < state.history.size(); ++s) {
            const auto& earlier = state.history[s];
            if (earlier.part == target && earlier.leftover == arrived_next_to) {
                auto result = rearrange(state, s + 1);
                commit(CommitKind::rearrangement, start_potential, potential(problem_, result), steps_so_far);
                return result;
            }
        }

        part = target;
        component = std::move(next_component);
        previous = x;
    }
}

Partition Runner::rearrange(const ShuffleState& state, std::size_t s)
{
    const auto t = state.history.size();
    if (s == 0 || s >= t)
        throw ContractError("rearrange needs 1 <= s < t (s = " + std::to_string(s) + ", t = " + std::to_string(t) + ")");
    const auto& step_s = state.history[s - 1];
    const auto part = step_s.part;
    const auto r = problem_.budget(part);
    const auto& h = problem_.height(part);
    const Vertex x_s = step_s.moved;
    const Vertex x_t = state.history[t - 1].moved;

    auto fail = [&](const std::string& what) {
        return InternalError("rearrangement (s = " + std::to_string(s) + ", t = " + std::to_string(t) + "): " + what +
                             describe(state));
    };

    auto q = step_s.leftover;
    q.insert(x_s);
    q.insert(x_t);
    if (x_s == x_t || !is_connected(graph_, q))
        throw fail("Q = G[A_s + x_t] is not a connected graph with x_s != x_t");
    if (!is_critical_pair(h, graph_, q, x_s, x_t))
        throw fail("{x_s, x_t} = {" + std::to_string(x_s) + ", " + std::to_string(x_t) + "} is not a critical pair in Q");
    auto q_without_x_t = q;
    q_without_x_t.erase(x_t);
    auto q_without_x_s = q;
    q_without_x_s.erase(x_s);
    if (degree_in(graph_, x_s, q_without_x_t) < r || degree_in(graph_, x_t, q_without_x_s) < r)
        throw fail("critical pair degrees fall below r");

    std::optional<Vertex> z;
    (graph_.neighbors(x_s) & graph_.neighbors(x_t) & q).for_each([&](Vertex v) {
        if (!z && degree_in(graph_, v, q) >= r + 1)
            z = v;
    });
    if (!z)
        throw HeightContractError("height '" + h.name() + "' (r = " + std::to_string(r) +
                                  "): no common neighbor of degree >= r + 1 for the critical pair {" +
                                  std::to_string(x_s) + ", " + std::to_string(x_t) + "} (property 4)" +
                                  describe(state));

    Partition p = step_s.snapshot;
    const auto f_before = f_value(problem_, p);

    VertexSet x_set(graph_.order());
    for (std::size_t j = s + 1; j + 1 <= t - 1; ++j)
        x_set.insert(state.history[j - 1].moved);
    x_set &= p.part(part);
    const auto evicted = x_set.to_vector();

    for (Vertex a : evicted) {
        if (graph_.neighbors(a).intersects(x_set))
            throw fail("X is not independent");
        if (degree_in(graph_, a, p.part(part)) < r)
            throw fail("member " + std::to_string(a) + " of X has fewer than r neighbors in V_{s,i_s}");
    }
    for (Vertex a : evicted) {
        const auto targets = find_targets(problem_, p, a, part);
        if (targets.empty())
            throw fail("member " + std::to_string(a) + " of X has no target part");
        move(p, a, targets.front(), MoveKind::evict_x, step_s.snapshot);
    }

    const auto home = p.part_of(x_t);
    if (home == part)
        throw fail("x_t already lies in part i_s");
    if (degree_in(graph_, x_t, p.part(part)) != r)
        throw fail("x_t has " + std::to_string(degree_in(graph_, x_t, p.part(part))) +
                   " neighbors in part i_s after evicting X, expected exactly r = " + std::to_string(r));
    if (degree_in(graph_, x_t, p.part(home)) < problem_.budget(home))
        throw fail("x_t has fewer than r neighbors in its own part");
    move(p, x_t, part, MoveKind::insert_x_t, step_s.snapshot);

    if (p.part_of(*z) != part)
        throw fail("z = " + std::to_string(*z) + " left part i_s");
    if (degree_in(graph_, *z, p.part(part)) < r + 1)
        throw fail("z = " + std::to_string(*z) + " has fewer than r + 1 neighbors in part i_s");
    const auto z_targets = find_targets(problem_, p, *z, part);
    if (z_targets.empty())
        throw fail("z has no target part");
    move(p, *z, z_targets.front(), MoveKind::evict_z, step_s.snapshot);

    const auto f_after = f_value(problem_, p);
    if (f_after >= f_before)
        throw fail("f did not decrease (" + std::to_string(f_before) + " -> " + std::to_string(f_after) + ")");
    if (trace_ != nullptr)
        trace_->rearrangements.push_back({s, t, x_s, x_t, *z, evicted, f_before, f_after});
    return p;
}

Partition Runner::run_main(Partition p)
{
    for (;;) {
        p = degree_fix(std::move(p));
        std::optional<std::pair<std::size_t, VertexSet>> bad;
        for (std::size_t i = 0; i < problem_.parts() && !bad; ++i)
            for (auto& comp : components(graph_, p.part(i)))
                if (problem_.height(i)(graph_, comp) > 0) {
                    bad.emplace(i, std::move(comp));
                    break;
                }
        if (!bad)
            return p;
        p = resolve(p, bad->first, bad->second);
    }
}

Partition starting_partition(const Problem& problem, const EngineOptions& options)
{
    if (!options.initial)
        return initial_partition(problem, options.seed);
    check_shape(problem, *options.initial);
    return *options.initial;
}

} // namespace

void check_main_hypothesis(const Problem& problem) { check_bound(problem, 2, "degree-budget"); }

void check_lovasz_hypothesis(const Problem& problem) { check_bound(problem, 1, "degree-budget"); }

Partition initial_partition(const Problem& problem, std::optional<std::uint64_t> seed)
{
    const auto n = problem.graph().order();
    return seed ? Partition::random(n, problem.parts(), *seed) : Partition::round_robin(n, problem.parts());
}

std::vector<std::size_t> find_targets(const Problem& problem, const Partition& partition, Vertex x, std::size_t i)
{
    struct Candidate {
        long long slack;
        int isolated;
        std::size_t part;
    };
    std::vector<Candidate> found;
    for (std::size_t j = 0; j < problem.parts(); ++j) {
        if (j == i)
            continue;
        const auto d = degree_in(problem.graph(), x, partition.part(j));
        if (d > problem.budget(j))
            continue;
        found.push_back({static_cast<long long>(d) - static_cast<long long>(problem.budget(j)), d == 0 ? 1 : 0, j});
    }
    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.slack, a.isolated, a.part) < std::tie(b.slack, b.isolated, b.part);
    });
    std::vector<std::size_t> out;
    out.reserve(found.size());
    for (const auto& c : found)
        out.push_back(c.part);
    return out;
}

Partition degree_fix(const Problem& problem, Partition partition, const EngineOptions& options)
{
    check_shape(problem, partition);
    Runner runner(problem, options);
    return runner.degree_fix(std::move(partition));
}

Partition resolve_bad_component(const Problem& problem, const Partition& partition, std::size_t part,
                                const VertexSet& component, const EngineOptions& options)
{
    check_shape(problem, partition);
    if (part >= problem.parts())
        throw ContractError("part index " + std::to_string(part) + " out of range");
    const auto comps = components(problem.graph(), partition.part(part));
    if (std::find(comps.begin(), comps.end(), component) == comps.end())
        throw ContractError("resolve_bad_component needs a component of the named part");
    if (problem.height(part)(problem.graph(), component) == 0)
        throw ContractError("resolve_bad_component needs a component of positive height");
    if (max_degree_within(problem.graph(), partition.part(part)) > problem.budget(part))
        throw ContractError("resolve_bad_component needs a degree-feasible partition");
    Runner runner(problem, options);
    return runner.resolve(partition, part, component);
}

Partition rearrange(const Problem& problem, const ShuffleState& state, std::size_t s, const EngineOptions& options)
{
    Runner runner(problem, options);
    return runner.rearrange(state, s);
}

Partition partition_main(const Problem& problem, const EngineOptions& options)
{
    check_main_hypothesis(problem);
    Runner runner(problem, options);
    return runner.run_main(starting_partition(problem, options));
}

Partition partition_lovasz(const Problem& problem, const EngineOptions& options)
{
    check_lovasz_hypothesis(problem);
    Runner runner(problem, options);
    return runner.degree_fix(starting_partition(problem, options));
}

} // namespace hpart
