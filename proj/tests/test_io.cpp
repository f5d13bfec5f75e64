#include <doctest.h>

#include <random>

#include "hpart/errors.hpp"
#include "hpart/io.hpp"
#include "oracles.hpp"

using namespace hpart;
using namespace hpart::testing;

TEST_SUITE("io")
{
    TEST_CASE("parse_graph examples")
    {
        const auto k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 3 1");
        CHECK(k3.edges() == complete(3).edges());

        const auto k2 = parse_graph("c hi\np edge 2 1\ne 1 2");
        CHECK(k2.order() == 2);
        CHECK(k2.edges() == std::vector<Edge>{{0, 1}});

        CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1"), InputError);
    }

    TEST_CASE("parse errors carry line numbers")
    {
        auto message = [](std::string_view text) {
            try {
                parse_graph(text);
            } catch (const InputError& e) {
                return std::string(e.what());
            }
            return std::string();
        };
        CHECK(message("c only\ne 1 2").find("line 2") != std::string::npos);
        CHECK(message("p edge 2 1\ne 1 3").find("line 2") != std::string::npos);
        CHECK(message("p edge 2 1\ne 0 1").find("line 2") != std::string::npos);
        CHECK(message("p edge 2 1\np edge 2 1").find("line 2") != std::string::npos);
        CHECK(message("p edge 2 1\nx 1 2").find("line 2") != std::string::npos);
        CHECK_FALSE(message("").empty());
        CHECK(message("p edge 3 0\n\nc trailing").empty());
    }

    TEST_CASE("declared edge count is advisory")
    {
        std::vector<std::string> warnings;
        const auto g = parse_graph("p edge 3 5\ne 1 2\ne 1 2\ne 2 3\n", &warnings);
        CHECK(g.size() == 2);
        CHECK(warnings.size() == 1);
        warnings.clear();
        parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", &warnings);
        CHECK(warnings.empty());
    }

    TEST_CASE("round trip through DIMACS text")
    {
        std::mt19937_64 rng(17);
        for (int round = 0; round < 100; ++round) {
            const auto g = random_graph(1 + round % 30, 0.3, rng);
            const auto back = parse_graph(format_dimacs(g));
            CHECK(back.order() == g.order());
            CHECK(back.edges() == g.edges());
        }
    }

    TEST_CASE("format_partition")
    {
        const auto p = Partition::from_assignment(2, {0, 0, 1});
        CHECK(format_partition(p, true) == "{\"k\":2,\"parts\":[[1,2],[3]]}\n");
        CHECK(format_partition(p, false) == "1 2\n3\n");

        const auto gap = Partition::from_assignment(3, {0, 2});
        CHECK(format_partition(gap, true) == "{\"k\":3,\"parts\":[[1],[],[2]]}\n");
        CHECK(format_partition(gap, false) == "1\n\n2\n");

        CHECK(format_partition(Partition(0, 2), true) == "{\"k\":2,\"parts\":[[],[]]}\n");
    }

    TEST_CASE("partition documents round trip")
    {
        const auto p = Partition::from_assignment(3, {2, 0, 1, 0, 2});
        const auto parts = parse_partition_document(format_partition(p, true));
        REQUIRE(parts.size() == 3);
        CHECK(parts[0] == std::vector<Vertex>{1, 3});
        CHECK(parts[1] == std::vector<Vertex>{2});
        CHECK(parts[2] == std::vector<Vertex>{0, 4});

        CHECK_THROWS_AS(parse_partition_document("{\"parts\":[[0]]}"), InputError);
        CHECK_THROWS_AS(parse_partition_document("{\"parts\":[[-1]]}"), InputError);
        CHECK_THROWS_AS(parse_partition_document("{\"parts\":[[1.5]]}"), InputError);
        CHECK_THROWS_AS(parse_partition_document("{\"k\":3,\"parts\":[[1]]}"), InputError);
        CHECK_THROWS_AS(parse_partition_document("[1,2]"), InputError);
        CHECK_THROWS_AS(parse_partition_document("{"), InputError);
    }

    TEST_CASE("reports serialize with sorted keys")
    {
        ValidationReport ok{true, {}};
        CHECK(format_report(ok, true) == "{\"ok\":true,\"violations\":[]}\n");
        CHECK(format_report(ok, false) == "ok\n");

        ValidationReport bad{false, {{ViolationKind::height, 0, {0, 1, 2}, "height 1"}}};
        CHECK(format_report(bad, true) ==
              "{\"ok\":false,\"violations\":[{\"detail\":\"height 1\",\"kind\":\"height\",\"part\":1,"
              "\"vertices\":[1,2,3]}]}\n");
        CHECK(format_report(bad, false) == "violation height part 1 vertices 1 2 3: height 1\n");

        AxiomReport axioms{false, {{3, 3, {{0, 1}, {0, 2}, {1, 2}}, {0}, "d"}}};
        CHECK(format_report(axioms, true) ==
              "{\"failures\":[{\"detail\":\"d\",\"n\":3,\"property\":3,\"vertices\":[1],"
              "\"witness\":[[1,2],[1,3],[2,3]]}],\"ok\":false}\n");
        CHECK(format_report(axioms, false) == "property 3 fails on n = 3, edges 1-2 1-3 2-3, vertices 1: d\n");
    }
}
