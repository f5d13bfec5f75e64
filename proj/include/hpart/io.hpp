#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hpart/graph.hpp"
#include "hpart/partition.hpp"
#include "hpart/verify.hpp"

namespace hpart {

/// Parse a DIMACS-style graph: `c` comment lines, one `p edge <n> <m>` line
/// and `e <u> <v>` lines with 1-indexed endpoints. Repeated edges collapse.
/// A declared edge count that disagrees with the distinct edges read is
/// reported through `warnings`, not as an error. Throws InputError (with the
/// line number) on a missing or repeated problem line, bad endpoints or
/// self-loops.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);

Graph read_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Inverse of parse_graph: problem line plus one `e` line per edge (u < v).
std::string format_dimacs(const Graph& g);

// {"k": k, "parts": [[1-indexed ids ascending], ...]}
nlohmann::json partition_document(const Partition& partition);

// JSON document or one line per part, newline-terminated.
std::string format_partition(const Partition& partition, bool json);

/// Parse a partition document into 0-indexed id lists. Ids are only checked
/// to be positive integers; coverage is verify_partition's job.
std::vector<std::vector<Vertex>> parse_partition_document(std::string_view text);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const AxiomReport& report);

std::string format_report(const ValidationReport& report, bool json);
std::string format_report(const AxiomReport& report, bool json);

} // namespace hpart
