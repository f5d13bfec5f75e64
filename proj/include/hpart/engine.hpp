#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpart/partition.hpp"

namespace hpart {

enum class MoveKind {
    degree_fix,     // strict f decrease, d_{V_i}(x) > r_i
    shuffle,        // critical vertex moved to a target part
    overload_evict, // resident pushed over budget by a shuffle arrival
    isolation,      // critical vertex moved into an r = 0 part as K_1
    evict_x,        // rearrangement: member of X leaves part i_s
    insert_x_t,     // rearrangement: x_t enters part i_s
    evict_z,        // rearrangement: common neighbor z leaves part i_s
};

enum class CommitKind {
    degree_fix,
    f_decrease,
    c_decrease,
    h_decrease,
    isolation,
    rearrangement,
};

const char* to_string(MoveKind kind);
const char* to_string(CommitKind kind);

struct MoveRecord {
    MoveKind kind;
    Vertex vertex;
    std::size_t from;
    std::size_t to;
    Potential before;
    Potential after;
};

/// One accepted change of the working partition. Rearrangement commits are
/// measured from the snapshot they rewound to, which carries the same
/// potential as the partition the shuffle started from.
struct CommitRecord {
    CommitKind kind;
    Potential before;
    Potential after;
    std::size_t shuffle_steps;
};

struct RearrangeRecord {
    std::size_t s; // 1-based shuffle step whose leftover repeated
    std::size_t t; // the repeat was found when x_t arrived
    Vertex x_s;
    Vertex x_t;
    Vertex z;
    std::vector<Vertex> evicted; // X
    long long f_before;
    long long f_after;
};

struct Trace {
    std::vector<MoveRecord> moves;
    std::vector<CommitRecord> commits;
    std::vector<RearrangeRecord> rearrangements;
};

/// Step j of a shuffle: part i_j, moved vertex x_j, component A_j, leftover
/// A_j - x_j and the partition P_j before x_j moved.
struct ShuffleStep {
    std::size_t part;
    Vertex moved;
    VertexSet component;
    VertexSet leftover;
    Partition snapshot;
};

struct ShuffleState {
    std::vector<ShuffleStep> history;
};

struct EngineOptions {
    // Maximum number of vertex moves; default_step_budget() when unset.
    std::optional<std::uint64_t> step_budget;
    // Random initial assignment instead of round-robin.
    std::optional<std::uint64_t> seed;
    // Explicit starting partition; takes precedence over seed.
    std::optional<Partition> initial;
    Trace* trace = nullptr;
};

class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, Partition best, std::uint64_t steps)
        : std::runtime_error(what), best_(std::move(best)), steps_(steps) {}

    const Partition& best() const { return best_; }
    std::uint64_t steps() const { return steps_; }

private:
    Partition best_;
    std::uint64_t steps_;
};

// 10 n^2 (|E| + Σ r_i n + n + 1).
std::uint64_t default_step_budget(const Problem& problem);

// Throw HypothesisError unless Σ r_i >= Δ(G) + 2 - k (resp. + 1 - k).
void check_main_hypothesis(const Problem& problem);
void check_lovasz_hypothesis(const Problem& problem);

Partition initial_partition(const Problem& problem, std::optional<std::uint64_t> seed = std::nullopt);

/// Parts j != i with d_{V_j}(x) <= r_j, ordered by (d - r_j, then parts
/// where x has a neighbor first, then index).
std::vector<std::size_t> find_targets(const Problem& problem, const Partition& partition, Vertex x, std::size_t i);

/// Move over-budget vertices (lowest id first) until every part satisfies
/// Δ(G[V_i]) <= r_i. Each move strictly lowers f. Throws HypothesisError if a
/// violating vertex has nowhere to go.
Partition degree_fix(const Problem& problem, Partition partition, const EngineOptions& options = {});

/// Run the shuffle from the bad component `component` of part `part` of a
/// degree-feasible partition and return a partition that is strictly better
/// in (f, c, h), or that results from an isolation move.
Partition resolve_bad_component(const Problem& problem, const Partition& partition, std::size_t part,
                                const VertexSet& component, const EngineOptions& options = {});

/// Rewind to the snapshot of step `s` (1-based) and apply the X / x_t / z
/// moves. `state` holds steps 1..t; the repeat was detected when x_t (the
/// last recorded mover) arrived next to the leftover of step s.
Partition rearrange(const Problem& problem, const ShuffleState& state, std::size_t s,
                    const EngineOptions& options = {});

/// Partition with Δ(G[V_i]) <= r_i and h_i(D) = 0 for every component D of
/// every G[V_i]. Requires Σ r_i >= Δ(G) + 2 - k.
Partition partition_main(const Problem& problem, const EngineOptions& options = {});

/// Partition with Δ(G[V_i]) <= r_i by plain f-descent. Heights are ignored.
/// Requires Σ r_i >= Δ(G) + 1 - k.
Partition partition_lovasz(const Problem& problem, const EngineOptions& options = {});

} // namespace hpart
