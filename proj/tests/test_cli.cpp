#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <string>

#include <nhs/nhs.hpp>

#include "generators.hpp"
#include "helpers.hpp"

using Catch::Matchers::ContainsSubstring;
using testutil::count_occurrences;
using testutil::fixture_path;
using testutil::run_cli;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/nhs_cli_" + name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli validate") {
    SECTION("clean complex prints nothing and exits zero") {
        auto r = run_cli("validate " + fixture_path("quadrant_disk.nhs"));
        CHECK(r.status == 0);
        CHECK(r.output.empty());
    }

    SECTION("arc mismatches are reported one per line") {
        auto r = run_cli("validate " + fixture_path("quadrant_bad_pb.nhs"));
        CHECK(r.status == 1);
        CHECK(count_occurrences(r.output, "VIOLATION") == 2);
        CHECK_THAT(r.output, ContainsSubstring("VIOLATION cond=C2 at=aE "));
        CHECK_THAT(r.output, ContainsSubstring("VIOLATION cond=C2 at=aN "));
    }

    SECTION("non-alternating crossing is flagged") {
        auto r = run_cli("validate " + fixture_path("quadrant_nonalt.nhs"));
        CHECK(r.status == 1);
        CHECK_THAT(r.output,
                   ContainsSubstring("VIOLATION cond=Transversality at=z "));
    }

    SECTION("with a clean numbering") {
        auto r = run_cli("validate " + fixture_path("quadrant_disk.nhs") +
                         " --numbering " + fixture_path("twist.num"));
        CHECK(r.status == 0);
        CHECK(r.output.empty());
    }

    SECTION("with a numbering that overshoots at the rim") {
        std::string num = write_temp("overshoot.num",
                                     "region Q1 = 1\nregion Q2 = 2\n"
                                     "region Q3 = 1\nregion Q4 = 0\n");
        auto r = run_cli("validate " + fixture_path("quadrant_disk.nhs") +
                         " --numbering " + num);
        CHECK(r.status == 1);
        CHECK(count_occurrences(r.output, "VIOLATION") == 1);
        CHECK_THAT(r.output,
                   ContainsSubstring("VIOLATION cond=C3zero at=Q2,bNW "));
    }
}

TEST_CASE("cli enumerate") {
    std::string quadrant = fixture_path("quadrant_disk.nhs");

    SECTION("prints each numbering as a region block") {
        auto r = run_cli("enumerate " + quadrant + " --max-level 1");
        CHECK(r.status == 0);
        CHECK(r.output ==
              "region Q1 = 1\nregion Q2 = 0\nregion Q3 = 1\nregion Q4 = 0\n");
    }

    SECTION("empty result prints nothing") {
        auto r = run_cli("enumerate " + quadrant + " --max-level 0");
        CHECK(r.status == 0);
        CHECK(r.output.empty());

        auto loop = run_cli("enumerate " + fixture_path("torus_loop.nhs") +
                            " --max-level 3");
        CHECK(loop.status == 0);
        CHECK(loop.output.empty());
    }

    SECTION("brute force agrees with the search") {
        std::string annulus = fixture_path("annulus_core.nhs");
        auto fast = run_cli("enumerate " + annulus + " --max-level 2");
        auto slow = run_cli("enumerate " + annulus + " --max-level 2 --brute-force");
        CHECK(fast.status == 0);
        CHECK(slow.status == 0);
        CHECK_FALSE(fast.output.empty());
        CHECK(fast.output == slow.output);
    }

    SECTION("output is byte-stable across runs") {
        std::string cross = fixture_path("three_cross_disk.nhs");
        auto a = run_cli("enumerate " + cross + " --max-level 2");
        auto b = run_cli("enumerate " + cross + " --max-level 2");
        CHECK(a.status == 0);
        CHECK_FALSE(a.output.empty());
        CHECK(a.output == b.output);
    }

    SECTION("structural problems stop the run") {
        auto r = run_cli("enumerate " + fixture_path("quadrant_bad_pb.nhs") +
                         " --max-level 1");
        CHECK(r.status == 1);
        CHECK_THAT(r.output, ContainsSubstring("VIOLATION cond=C2"));
    }

    SECTION("brute force refuses oversized scans") {
        std::mt19937 rng(11);
        nhs::CurveComplex big =
            testgen::torus_chain(testgen::random_kinds(rng, 8));
        std::string path = write_temp("big.nhs", nhs::serialize_complex(big));
        auto r = run_cli("enumerate " + path + " --max-level 9 --brute-force");
        CHECK(r.status == 3);
        CHECK_THAT(r.output, ContainsSubstring("error"));
    }
}

TEST_CASE("cli invariants and reconstruct") {
    SECTION("invariants prints the summary line") {
        auto r = run_cli("invariants " + fixture_path("three_cross_disk.nhs") +
                         " --numbering " + fixture_path("three_cross.num"));
        CHECK(r.status == 0);
        CHECK(r.output ==
              "X: chi=1 boundary=1 components=1 orientable=yes genus=[0] "
              "twists=3\n");
    }

    SECTION("reconstruct prints the boundary trace first") {
        auto r = run_cli("reconstruct " + fixture_path("quadrant_disk.nhs") +
                         " --numbering " + fixture_path("twist.num"));
        CHECK(r.status == 0);
        CHECK(r.output ==
              "boundary: Cx1(cE@Q1.1) B(bNE@Q1.1) C'x0(dN@Q1.1) "
              "C'x0(dS@Q3.1) B(bSW@Q3.1) Cx1(cW@Q3.1)\n"
              "X: chi=1 boundary=1 components=1 orientable=yes genus=[0] "
              "twists=1\n");
    }

    SECTION("numbering violations gate the reconstruction") {
        std::string num = write_temp("gate.num",
                                     "region Q1 = 1\nregion Q2 = 2\n"
                                     "region Q3 = 1\nregion Q4 = 0\n");
        auto r = run_cli("reconstruct " + fixture_path("quadrant_disk.nhs") +
                         " --numbering " + num);
        CHECK(r.status == 1);
        CHECK_THAT(r.output, ContainsSubstring("VIOLATION cond=C3zero"));
    }
}

TEST_CASE("cli render") {
    SECTION("writes the drawing to the output file") {
        std::string out = "/tmp/nhs_cli_quadrant.svg";
        auto r = run_cli("render " + fixture_path("quadrant_disk.nhs") +
                         " --numbering " + fixture_path("twist.num") + " -o " +
                         out);
        CHECK(r.status == 0);
        CHECK(r.output.empty());
        std::string svg = testutil::read_file(out);
        CHECK(svg.substr(0, 5) == "<?xml");
        CHECK(count_occurrences(svg, "class=\"twist\"") == 1);
        CHECK(count_occurrences(svg, "<text ") == 4);
    }

    SECTION("non-flat bases exit with the unsupported code") {
        std::string num = write_temp("tor.num", "region tor = 0\n");
        auto r = run_cli("render " + fixture_path("torus_empty.nhs") +
                         " --numbering " + num);
        CHECK(r.status == 4);
        CHECK_THAT(r.output, ContainsSubstring("genus > 0"));

        auto grid = run_cli("render " + fixture_path("torus_grid22.nhs") +
                            " --numbering " + fixture_path("torus_grid22.num"));
        CHECK(grid.status == 4);
        CHECK_THAT(grid.output, ContainsSubstring("not flat"));
    }
}

TEST_CASE("cli error handling") {
    SECTION("unreadable input") {
        auto r = run_cli("validate /tmp/nhs_cli_does_not_exist.nhs");
        CHECK(r.status == 2);
        CHECK_THAT(r.output, ContainsSubstring("cannot open"));
    }

    SECTION("malformed complex") {
        std::string path = write_temp(
            "bad.nhs", "surface euler=one boundary_circles=0\n");
        auto r = run_cli("validate " + path);
        CHECK(r.status == 2);
        CHECK_THAT(r.output, ContainsSubstring("expected an integer"));
    }

    SECTION("numbering for an unknown region") {
        std::string num = write_temp("unknown.num", "region XX = 1\n");
        auto r = run_cli("validate " + fixture_path("quadrant_disk.nhs") +
                         " --numbering " + num);
        CHECK(r.status == 2);
        CHECK_THAT(r.output, ContainsSubstring("unknown region"));
    }

    SECTION("bad command lines") {
        CHECK(run_cli("").status == 2);
        CHECK(run_cli("validate").status == 2);
        CHECK(run_cli("validate --wat x.nhs").status == 2);
        CHECK(run_cli("enumerate " + fixture_path("quadrant_disk.nhs")).status ==
              2);
        CHECK(run_cli("invariants " + fixture_path("quadrant_disk.nhs")).status ==
              2);
    }

    SECTION("help exits zero") {
        auto r = run_cli("--help");
        CHECK(r.status == 0);
        for (const char* sub :
             {"validate", "enumerate", "reconstruct", "invariants", "render"})
            CHECK_THAT(r.output, ContainsSubstring(sub));
    }
}
