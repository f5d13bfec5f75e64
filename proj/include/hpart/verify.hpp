#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hpart/graph.hpp"
#include "hpart/heights.hpp"
#include "hpart/partition.hpp"

namespace hpart {

enum class ViolationKind { degree, height, cover };

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::size_t part;             // 0-based; meaningless for some cover violations
    std::vector<Vertex> vertices; // offending vertex or component
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Check Δ(G[V_i]) <= r_i and h_i(D) = 0 for every component D of every
/// G[V_i]. Parts are given as raw id lists so that a list which misses or
/// repeats vertices is reported as a cover violation.
ValidationReport verify_partition(const Problem& problem, const std::vector<std::vector<Vertex>>& parts);

ValidationReport verify_partition(const Problem& problem, const Partition& partition);

// Same checks, short-circuiting on the first failure.
bool is_valid_partition(const Problem& problem, const Partition& partition);

inline constexpr std::uint64_t default_oracle_cap = 10'000'000;

/// Lexicographically first assignment (vertex 0 most significant, part
/// indices ascending) that passes verify_partition, or nullopt. Throws
/// SizeError if k^n exceeds `cap`.
std::optional<Partition> brute_force_exists(const Problem& problem, std::uint64_t cap = default_oracle_cap);

inline constexpr std::size_t default_enumeration_max = 7;

/// Visit every connected labeled graph on n vertices exactly once, in order
/// of the edge-subset bitmask. With `up_to_isomorphism`, only the first
/// labeled representative of each isomorphism class (by minimum adjacency
/// encoding over all permutations) is visited. Throws SizeError for n > n_max.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit,
                              bool up_to_isomorphism = false, std::size_t n_max = default_enumeration_max);

std::vector<Graph> enumerate_connected_graphs(std::size_t n, bool up_to_isomorphism = false,
                                              std::size_t n_max = default_enumeration_max);

// Canonical form: the minimum adjacency encoding over all vertex permutations.
std::vector<bool> canonical_encoding(const Graph& g);

struct AxiomFailure {
    int property; // 1..4
    std::size_t n;
    std::vector<Edge> witness;
    std::vector<Vertex> vertices;
    std::string detail;
};

struct AxiomReport {
    bool ok = true;
    std::vector<AxiomFailure> failures;
};

/// Exhaustively test properties 1-4 of an r-height function on every
/// connected labeled graph with at most n_max vertices. Stops after the
/// smallest n with a failure and reports the first failing graph per
/// property at that n.
AxiomReport check_height_properties(const HeightFunction& h, std::size_t r, std::size_t n_max);

} // namespace hpart
