#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hpart::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1; // verification failed / no witness
inline constexpr int exit_rejected = 2; // hypothesis violated or malformed input
inline constexpr int exit_failure = 3;  // step budget or internal error

struct RunConfig {
    std::string command; // partition | lovasz | verify | oracle | check-height
    std::string graph_path;
    std::vector<std::size_t> budgets;
    std::vector<std::string> heights;
    std::string parts_path;
    std::size_t n_max = 6;
    std::optional<std::uint64_t> step_budget;
    std::optional<std::uint64_t> seed;
    std::uint64_t oracle_cap = 10'000'000;
    bool json = false;
    bool trace = false;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parse argv-style arguments (without the program name) and run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hpart::cli
