#include "hpart/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpart/engine.hpp"
#include "hpart/errors.hpp"
#include "hpart/io.hpp"
#include "hpart/verify.hpp"

namespace hpart::cli {

namespace {

std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Problem load_problem(const RunConfig& config, std::ostream& err)
{
    if (config.budgets.empty())
        throw InputError("--r needs at least one budget");
    std::vector<std::string> names = config.heights;
    if (names.empty())
        names.assign(config.budgets.size(), "zero");
    if (names.size() != config.budgets.size())
        throw InputError("--r lists " + std::to_string(config.budgets.size()) + " budgets but --height lists " +
                         std::to_string(names.size()) + " names");

    std::vector<std::string> warnings;
    auto g = read_graph_file(config.graph_path, &warnings);
    for (const auto& w : warnings)
        err << "warning: " << w << '\n';

    std::vector<HeightFunction> heights;
    for (std::size_t i = 0; i < names.size(); ++i) {
        try {
            heights.push_back(make_height(names[i], config.budgets[i]));
        } catch (const ContractError& e) {
            throw InputError("part " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return Problem(std::move(g), config.budgets, std::move(heights));
}

nlohmann::json potential_json(const Potential& p) { return {{"f", p.f}, {"c", p.c}, {"h", p.h}}; }

void emit_trace(const Trace& trace, std::ostream& err)
{
    for (const auto& m : trace.moves)
        err << nlohmann::json{{"record", "move"},
                              {"kind", to_string(m.kind)},
                              {"vertex", m.vertex + 1},
                              {"from", m.from + 1},
                              {"to", m.to + 1},
                              {"before", potential_json(m.before)},
                              {"after", potential_json(m.after)}}
                   .dump()
            << '\n';
    for (const auto& c : trace.commits)
        err << nlohmann::json{{"record", "commit"},
                              {"kind", to_string(c.kind)},
                              {"before", potential_json(c.before)},
                              {"after", potential_json(c.after)},
                              {"shuffle_steps", c.shuffle_steps}}
                   .dump()
            << '\n';
}

int run_partition(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto problem = load_problem(config, err);
    Trace trace;
    EngineOptions options;
    options.step_budget = config.step_budget;
    options.seed = config.seed;
    options.trace = config.trace ? &trace : nullptr;
    try {
        const auto result =
            config.command == "lovasz" ? partition_lovasz(problem, options) : partition_main(problem, options);
        if (config.trace)
            emit_trace(trace, err);
        out << format_partition(result, config.json);
        return exit_ok;
    } catch (const BudgetError& e) {
        if (config.trace)
            emit_trace(trace, err);
        err << "error: " << e.what() << "; best partition so far:\n" << format_partition(e.best(), config.json);
        return exit_failure;
    }
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto problem = load_problem(config, err);
    if (config.parts_path.empty())
        throw InputError("verify needs --parts");
    const auto parts = parse_partition_document(read_text(config.parts_path));
    const auto report = verify_partition(problem, parts);
    out << format_report(report, config.json);
    return report.ok ? exit_ok : exit_negative;
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto problem = load_problem(config, err);
    const auto witness = brute_force_exists(problem, config.oracle_cap);
    if (!witness) {
        out << (config.json ? "null\n" : "none\n");
        return exit_negative;
    }
    out << format_partition(*witness, config.json);
    return exit_ok;
}

int run_check_height(const RunConfig& config, std::ostream& out)
{
    if (config.heights.size() != 1 || config.budgets.size() != 1)
        throw InputError("check-height takes exactly one --height name and one --r value");
    HeightFunction h = [&] {
        try {
            return make_height(config.heights.front(), config.budgets.front());
        } catch (const ContractError& e) {
            throw InputError(e.what());
        }
    }();
    if (config.n_max > default_enumeration_max)
        throw InputError("--n-max is limited to " + std::to_string(default_enumeration_max));
    const auto report = check_height_properties(h, config.budgets.front(), config.n_max);
    out << format_report(report, config.json);
    return report.ok ? exit_ok : exit_negative;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.command == "partition" || config.command == "lovasz")
            return run_partition(config, out, err);
        if (config.command == "verify")
            return run_verify(config, out, err);
        if (config.command == "oracle")
            return run_oracle(config, out, err);
        if (config.command == "check-height")
            return run_check_height(config, out);
        err << "error: unknown command '" << config.command << "'\n";
        return exit_rejected;
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << '\n';
        return exit_rejected;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_rejected;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_rejected;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return exit_rejected;
    } catch (const HeightContractError& e) {
        err << "error: height function contract violated: " << e.what() << '\n';
        return exit_failure;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_failure;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Partition graph vertices into parts of bounded degree and zero height"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "json";
    std::string budgets;
    std::string heights;

    auto add_problem_options = [&](CLI::App* sub) {
        sub->add_option("--graph", config.graph_path, "DIMACS graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--r", budgets, "comma-separated degree budgets r_1,...,r_k")->required();
        sub->add_option("--height", heights, "comma-separated height names (zero, regular); default all zero");
        sub->add_option("--format", format, "output format (default json)")->check(CLI::IsMember({"text", "json"}));
    };

    auto* partition = app.add_subcommand("partition", "bounded-degree partition with zero-height components");
    add_problem_options(partition);
    auto* lovasz = app.add_subcommand("lovasz", "bounded-degree partition under the weaker budget bound");
    add_problem_options(lovasz);
    for (auto* sub : {partition, lovasz}) {
        sub->add_option("--budget", config.step_budget, "maximum number of vertex moves");
        sub->add_option("--seed", config.seed, "random initial assignment from this seed");
        sub->add_flag("--trace", config.trace, "write move and commit records to stderr as JSON lines");
    }

    auto* verify = app.add_subcommand("verify", "check a partition document");
    add_problem_options(verify);
    verify->add_option("--parts", config.parts_path, "partition document (JSON)")->required()->check(CLI::ExistingFile);

    auto* oracle = app.add_subcommand("oracle", "brute-force search for a valid partition");
    add_problem_options(oracle);
    oracle->add_option("--cap", config.oracle_cap, "maximum number of assignments k^n");

    auto* check = app.add_subcommand("check-height", "exhaustively test the height-function properties");
    check->add_option("--height", heights, "height name")->required();
    check->add_option("--r", budgets, "budget r")->required();
    check->add_option("--n-max", config.n_max, "largest graph order to enumerate");
    check->add_option("--format", format, "output format (default json)")->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_rejected;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.json = format == "json";
    try {
        for (const auto& item : CLI::detail::split(budgets, ',')) {
            std::size_t value = 0;
            std::size_t used = 0;
            value = std::stoul(item, &used);
            if (used != item.size() || item.find('-') != std::string::npos)
                throw std::invalid_argument(item);
            config.budgets.push_back(value);
        }
    } catch (const std::exception&) {
        err << "error: --r expects comma-separated natural numbers, got '" << budgets << "'\n";
        return exit_rejected;
    }
    if (!heights.empty())
        config.heights = CLI::detail::split(heights, ',');
    return run(config, out, err);
}

} // namespace hpart::cli
