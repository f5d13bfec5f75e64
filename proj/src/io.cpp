#include "hpart/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "hpart/errors.hpp"

namespace hpart {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            words.push_back(line.substr(start, i - start));
    }
    return words;
}

std::size_t parse_count(std::string_view word, std::size_t line_no, const char* what)
{
    std::size_t value = 0;
    const auto* end = word.data() + word.size();
    const auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw InputError("line " + std::to_string(line_no) + ": expected " + what + ", got '" + std::string(word) +
                         "'");
    return value;
}

std::string json_line(const nlohmann::json& doc) { return doc.dump() + "\n"; }

} // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings)
{
    std::optional<std::size_t> n;
    std::size_t declared = 0;
    std::size_t problem_line = 0;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto words = split_words(line);
        if (words.empty() || words[0] == "c")
            continue;
        if (words[0] == "p") {
            if (n)
                throw InputError("line " + std::to_string(line_no) + ": second problem line (first on line " +
                                 std::to_string(problem_line) + ")");
            if (words.size() != 4 || (words[1] != "edge" && words[1] != "col"))
                throw InputError("line " + std::to_string(line_no) + ": expected 'p edge <n> <m>'");
            n = parse_count(words[2], line_no, "a vertex count");
            declared = parse_count(words[3], line_no, "an edge count");
            problem_line = line_no;
            continue;
        }
        if (words[0] == "e") {
            if (!n)
                throw InputError("line " + std::to_string(line_no) + ": edge before the 'p edge' line");
            if (words.size() != 3)
                throw InputError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
            const auto u = parse_count(words[1], line_no, "a vertex id");
            const auto v = parse_count(words[2], line_no, "a vertex id");
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw InputError("line " + std::to_string(line_no) + ": endpoint outside 1.." + std::to_string(*n));
            if (u == v)
                throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw InputError("line " + std::to_string(line_no) + ": unknown line type '" + std::string(words[0]) + "'");
    }
    if (!n)
        throw InputError("missing 'p edge <n> <m>' line");

    auto g = Graph::from_edge_list(*n, edges);
    if (warnings != nullptr && g.size() != declared)
        warnings->push_back("problem line declares " + std::to_string(declared) + " edges, read " +
                            std::to_string(g.size()) + " distinct edges");
    return g;
}

Graph read_graph_file(const std::string& path, std::vector<std::string>* warnings)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), warnings);
}

std::string format_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

nlohmann::json partition_document(const Partition& partition)
{
    auto parts = nlohmann::json::array();
    for (const auto& set : partition.part_sets()) {
        auto ids = nlohmann::json::array();
        set.for_each([&](Vertex v) { ids.push_back(v + 1); });
        parts.push_back(std::move(ids));
    }
    return {{"k", partition.parts()}, {"parts", std::move(parts)}};
}

std::string format_partition(const Partition& partition, bool json)
{
    if (json)
        return json_line(partition_document(partition));
    std::string out;
    for (const auto& set : partition.part_sets()) {
        bool first = true;
        set.for_each([&](Vertex v) {
            if (!first)
                out += ' ';
            out += std::to_string(v + 1);
            first = false;
        });
        out += '\n';
    }
    return out;
}

std::vector<std::vector<Vertex>> parse_partition_document(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("partition document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array())
        throw InputError("partition document needs a \"parts\" array");
    std::vector<std::vector<Vertex>> parts;
    for (const auto& part : doc["parts"]) {
        if (!part.is_array())
            throw InputError("each entry of \"parts\" must be an array of vertex ids");
        auto& ids = parts.emplace_back();
        for (const auto& id : part) {
            if (!id.is_number_unsigned() || id.get<std::uint64_t>() == 0)
                throw InputError("vertex ids must be positive integers, got " + id.dump());
            ids.push_back(static_cast<Vertex>(id.get<std::uint64_t>() - 1));
        }
    }
    if (doc.contains("k")) {
        if (!doc["k"].is_number_unsigned() || doc["k"].get<std::size_t>() != parts.size())
            throw InputError("\"k\" does not match the number of parts");
    }
    return parts;
}

nlohmann::json to_json(const ValidationReport& report)
{
    auto violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        auto vertices = nlohmann::json::array();
        for (auto id : v.vertices)
            vertices.push_back(id + 1);
        violations.push_back(
            {{"kind", to_string(v.kind)}, {"part", v.part + 1}, {"vertices", vertices}, {"detail", v.detail}});
    }
    return {{"ok", report.ok}, {"violations", std::move(violations)}};
}

nlohmann::json to_json(const AxiomReport& report)
{
    auto failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
        auto witness = nlohmann::json::array();
        for (const auto& [u, v] : f.witness)
            witness.push_back({u + 1, v + 1});
        auto vertices = nlohmann::json::array();
        for (auto id : f.vertices)
            vertices.push_back(id + 1);
        failures.push_back({{"property", f.property},
                            {"n", f.n},
                            {"witness", std::move(witness)},
                            {"vertices", std::move(vertices)},
                            {"detail", f.detail}});
    }
    return {{"ok", report.ok}, {"failures", std::move(failures)}};
}

std::string format_report(const ValidationReport& report, bool json)
{
    if (json)
        return json_line(to_json(report));
    if (report.ok)
        return "ok\n";
    std::ostringstream out;
    for (const auto& v : report.violations) {
        out << "violation " << to_string(v.kind) << " part " << v.part + 1 << " vertices";
        for (auto id : v.vertices)
            out << ' ' << id + 1;
        out << ": " << v.detail << '\n';
    }
    return out.str();
}

std::string format_report(const AxiomReport& report, bool json)
{
    if (json)
        return json_line(to_json(report));
    if (report.ok)
        return "ok\n";
    std::ostringstream out;
    for (const auto& f : report.failures) {
        out << "property " << f.property << " fails on n = " << f.n << ", edges";
        for (const auto& [u, v] : f.witness)
            out << ' ' << u + 1 << '-' << v + 1;
        if (!f.vertices.empty()) {
            out << ", vertices";
            for (auto id : f.vertices)
                out << ' ' << id + 1;
        }
        out << ": " << f.detail << '\n';
    }
    return out.str();
}

} // namespace hpart
