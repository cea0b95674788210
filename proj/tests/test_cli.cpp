#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "cprefix/nn.hpp"
#include "test_support.hpp"

using namespace testsupport;

namespace {

std::string cli_bin() {
    const char* bin = std::getenv("CPREFIX_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CPREFIX_BIN must point at the cprefix binary");
    return bin;
}

const std::string kThreePath =
    "cp 3\nedge 0 1\nedge 1 2\nlabels 0 1 2\nlabels 1 1 2 3\nlabels 2 2 3\n";

}  // namespace

TEST_CASE("solve modes on the three-vertex path") {
    std::string bin = cli_bin();
    std::string file = temp_path() + ".cp";
    write_file(file, kThreePath);

    SUBCASE("exact") {
        CommandResult r = run_command(bin, "solve " + file + " --exact");
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 8) == "value 3\n");
        CHECK(r.out.find("perm 0 ") != std::string::npos);
        CHECK(r.out.find("perm 2 ") != std::string::npos);
    }
    SUBCASE("oracle") {
        CommandResult r = run_command(bin, "solve " + file + " --oracle");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "value 3\n");
    }
    SUBCASE("approx emits its report comments") {
        CommandResult r = run_command(bin, "solve " + file + " --approx --L 2");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("# layer_value 2\n") != std::string::npos);
        CHECK(r.out.find("# L 2\n") != std::string::npos);
        CHECK(r.out.find("# class 0\n") != std::string::npos);
        CHECK(r.out.find("value ") != std::string::npos);
    }
    SUBCASE("stdin via -") {
        CommandResult r = run_command(bin, "solve - --exact", kThreePath);
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 8) == "value 3\n");
    }
    std::remove(file.c_str());
}

TEST_CASE("usage and validation errors exit 1") {
    std::string bin = cli_bin();
    std::string file = temp_path() + ".cp";
    write_file(file, kThreePath);

    SUBCASE("L below two") {
        CommandResult r = run_command(bin, "solve " + file + " --approx --L 1");
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("L must be >= 2") != std::string::npos);
    }
    SUBCASE("no mode chosen") {
        CHECK(run_command(bin, "solve " + file).exit_code == 1);
    }
    SUBCASE("two modes chosen") {
        CHECK(run_command(bin, "solve " + file + " --exact --oracle").exit_code == 1);
    }
    SUBCASE("missing file") {
        CHECK(run_command(bin, "solve /nonexistent.cp --exact").exit_code == 1);
    }
    SUBCASE("malformed instance") {
        CommandResult r = run_command(bin, "solve - --exact", "cp 2\nedge 0 0\n");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("unknown subcommand") {
        CHECK(run_command(bin, "frobnicate").exit_code == 1);
    }
    SUBCASE("bench needs a known suite") {
        CHECK(run_command(bin, "bench no-such-suite").exit_code == 1);
    }
    std::remove(file.c_str());
}

TEST_CASE("size guards exit 2") {
    std::string bin = cli_bin();
    CommandResult star = run_command(bin, "gen star --n 30 --universe 3 --seed 2");
    REQUIRE(star.exit_code == 0);
    CommandResult r = run_command(bin, "solve - --exact", star.out);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("guard") != std::string::npos);

    SUBCASE("guard overrides take effect") {
        CHECK(run_command(bin, "solve - --exact", kThreePath).exit_code == 0);
        CHECK(run_command(bin, "solve - --exact --max-entries 5", kThreePath)
                  .exit_code == 2);
        CHECK(run_command(bin, "solve - --exact --max-work 10", kThreePath)
                  .exit_code == 2);
    }
}

TEST_CASE("gen matches the library generators") {
    std::string bin = cli_bin();
    CommandResult r = run_command(bin, "gen tight-family --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == cprefix::serialize_nn(cprefix::tight_family(4)));

    CommandResult one = run_command(bin, "gen binary-tree --n 1 --seed 5");
    CHECK(one.exit_code == 0);
    CHECK(one.out.substr(0, 5) == "cp 1\n");
    CHECK(one.out.find("labels 0") != std::string::npos);
}

TEST_CASE("reduce pipelines") {
    std::string bin = cli_bin();
    std::string nnfile = temp_path() + ".nn";
    CommandResult tight = run_command(bin, "gen tight-family --n 4");
    write_file(nnfile, tight.out);

    SUBCASE("bipartite to star to solved value") {
        CommandResult star = run_command(bin, "reduce nn-to-star " + nnfile);
        REQUIRE(star.exit_code == 0);
        CommandResult solved = run_command(bin, "solve - --exact", star.out);
        CHECK(solved.exit_code == 0);
        CHECK(solved.out.substr(0, 8) == "value 8\n");
    }
    SUBCASE("star-to-nn inverts nn-to-star byte for byte") {
        CommandResult star = run_command(bin, "reduce nn-to-star " + nnfile);
        CommandResult back = run_command(bin, "reduce star-to-nn -", star.out);
        CHECK(back.exit_code == 0);
        CHECK(back.out == tight.out);
    }
    SUBCASE("star-to-nn rejects non-stars") {
        CommandResult r = run_command(bin, "reduce star-to-nn -", kThreePath);
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("not a star") != std::string::npos);
    }
    std::remove(nnfile.c_str());
}

TEST_CASE("analyze reports") {
    std::string bin = cli_bin();
    // Complete binary tree of height 2, vertices in level order.
    std::string h2 =
        "cp 7\nedge 0 1\nedge 0 2\nedge 1 3\nedge 1 4\nedge 2 5\nedge 2 6\n"
        "labels 0 a\nlabels 1 a\nlabels 2 a\nlabels 3 a\nlabels 4 a\nlabels 5 a\n"
        "labels 6 a\n";
    CommandResult sub = run_command(bin, "analyze subtrees -", h2);
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("total=37\n") != std::string::npos);
    CHECK(sub.out.find("bound=256\n") != std::string::npos);
    CHECK(sub.out.find("within_bound=true\n") != std::string::npos);

    std::string k22 = "nn 2 2\nedge 0 0\nedge 0 1\nedge 1 0\nedge 1 1\n";
    CommandResult ratio = run_command(bin, "analyze ratio -", k22);
    CHECK(ratio.exit_code == 0);
    CHECK(ratio.out ==
          "ebcs=4\nnn=4\nratio=1/1\nharmonic=3/2\nsandwich_ok=true\n");
}
