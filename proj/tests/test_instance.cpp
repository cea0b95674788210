#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "cprefix/instance.hpp"
#include "test_support.hpp"

using namespace cprefix;
using namespace testsupport;

TEST_CASE("lcp_length on hand examples") {
    std::vector<std::string> yx{"y", "x"}, yz{"y", "z"};
    CHECK(lcp_length(yx, yz) == 1);

    std::vector<std::string> empty, ab{"a", "b"};
    CHECK(lcp_length(empty, ab) == 0);

    std::vector<int> a{2, 1}, b{2, 1, 3};
    CHECK(lcp_length(a, b) == 2);
}

TEST_CASE("lcp_length is symmetric and bounded by the shorter sequence") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> a, b;
        for (std::uint64_t i = rng_below(rng, 6); i > 0; --i)
            a.push_back(static_cast<int>(rng_below(rng, 3)));
        for (std::uint64_t i = rng_below(rng, 6); i > 0; --i)
            b.push_back(static_cast<int>(rng_below(rng, 3)));
        auto k = lcp_length(a, b);
        CHECK(k == lcp_length(b, a));
        CHECK(k <= std::min(a.size(), b.size()));
    }
}

namespace {

CPInstance three_path() {
    return make_path({{"1", "2"}, {"1", "2", "3"}, {"2", "3"}});
}

}  // namespace

TEST_CASE("evaluate on the three-vertex path") {
    CPInstance inst = three_path();
    Assignment a = perms_of(inst, {{"2", "1"}, {"2", "1", "3"}, {"2", "3"}});
    BenefitReport report = evaluate(inst, a);
    REQUIRE(report.per_edge.size() == 2);
    CHECK(report.per_edge[0] == 2);
    CHECK(report.per_edge[1] == 1);
    CHECK(report.total == 3);
}

TEST_CASE("evaluate is zero on pairwise-disjoint label sets") {
    CPInstance inst = make_path({{"a"}, {"b", "c"}, {"d"}});
    Assignment a = perms_of(inst, {{"a"}, {"b", "c"}, {"d"}});
    CHECK(evaluate(inst, a).total == 0);
    Assignment b = perms_of(inst, {{"a"}, {"c", "b"}, {"d"}});
    CHECK(evaluate(inst, b).total == 0);
}

TEST_CASE("evaluate on a star") {
    CPInstance inst = make_cp(4, {{0, 1}, {0, 2}, {0, 3}},
                              {{"a", "b", "c"}, {"a", "b"}, {"a"}, {"b", "c"}});
    Assignment a = perms_of(inst, {{"a", "b", "c"}, {"a", "b"}, {"a"}, {"b", "c"}});
    CHECK(evaluate(inst, a).total == 3);
}

TEST_CASE("evaluate rejects bad assignments") {
    CPInstance inst = three_path();
    SUBCASE("wrong length") {
        Assignment a = perms_of(inst, {{"2"}, {"2", "1", "3"}, {"2", "3"}});
        CHECK_THROWS_AS(evaluate(inst, a), FeasibilityError);
    }
    SUBCASE("repeated label") {
        Assignment a = perms_of(inst, {{"2", "2"}, {"2", "1", "3"}, {"2", "3"}});
        CHECK_THROWS_AS(evaluate(inst, a), FeasibilityError);
    }
    SUBCASE("label from another vertex's set") {
        Assignment a = perms_of(inst, {{"2", "3"}, {"2", "1", "3"}, {"2", "3"}});
        CHECK_THROWS_AS(evaluate(inst, a), FeasibilityError);
    }
}

TEST_CASE("per-edge benefit never exceeds the smaller endpoint set") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        CPInstance inst = random_tree(2 + static_cast<int>(rng_below(rng, 5)), 4, 0, 3, rng);
        Assignment a;
        a.perms.resize(inst.vertex_count());
        for (int v = 0; v < inst.vertex_count(); ++v) {
            a.perms[v] = inst.labels_of(v);
            for (std::size_t i = a.perms[v].size(); i > 1; --i)
                std::swap(a.perms[v][i - 1], a.perms[v][rng_below(rng, i)]);
        }
        BenefitReport report = evaluate(inst, a);
        long long sum = 0;
        for (std::size_t i = 0; i < inst.edges().size(); ++i) {
            const Edge& e = inst.edges()[i];
            CHECK(report.per_edge[i] <=
                  static_cast<int>(std::min(inst.labels_of(e.u).size(),
                                            inst.labels_of(e.v).size())));
            sum += report.per_edge[i];
        }
        CHECK(sum == report.total);
    }
}

TEST_CASE("parse_cp on minimal inputs") {
    SUBCASE("single vertex") {
        CPInstance inst = parse_cp("cp 1\nlabels 0 a");
        CHECK(inst.vertex_count() == 1);
        CHECK(inst.labels_of(0).size() == 1);
        CHECK(inst.token(inst.labels_of(0)[0]) == "a");
    }
    SUBCASE("two-vertex path") {
        CPInstance inst = parse_cp("cp 2\nedge 0 1\nlabels 0 x y\nlabels 1 y z");
        CHECK(inst.vertex_count() == 2);
        REQUIRE(inst.edges().size() == 1);
        CHECK(inst.edges()[0] == Edge{0, 1});
        CHECK(inst.alphabet_size() == 3);
    }
    SUBCASE("comments and blank lines are skipped") {
        CPInstance inst = parse_cp("# header\ncp 1\n\n# mid\nlabels 0 a b\n");
        CHECK(inst.labels_of(0).size() == 2);
    }
}

TEST_CASE("parse_cp rejects malformed input with line numbers") {
    SUBCASE("self-loop is not a tree") {
        CHECK_THROWS_WITH_AS(parse_cp("cp 2\nedge 0 0\nlabels 0 a\nlabels 1 b"),
                             doctest::Contains("not a tree"), ValidationError);
    }
    SUBCASE("bad directive") {
        try {
            parse_cp("cp 2\nedge 0 1\nvertex 0 a\nlabels 1 b");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("malformed integer") {
        try {
            parse_cp("cp 2\nedge 0 x\nlabels 0 a\nlabels 1 b");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("malformed") != std::string::npos);
        }
    }
    SUBCASE("duplicate label within a vertex") {
        CHECK_THROWS_WITH_AS(parse_cp("cp 1\nlabels 0 a a"),
                             doctest::Contains("duplicate label"), ValidationError);
    }
    SUBCASE("missing labels line") {
        CHECK_THROWS_AS(parse_cp("cp 2\nedge 0 1\nlabels 0 a"), ParseError);
    }
    SUBCASE("duplicate labels line") {
        CHECK_THROWS_AS(parse_cp("cp 1\nlabels 0 a\nlabels 0 b"), ParseError);
    }
}

TEST_CASE("validate names the first violation") {
    CPDraft ok;
    ok.n = 3;
    ok.edges = {{0, 1}, {1, 2}};
    ok.labels = {{"1", "2"}, {"1", "2", "3"}, {"2", "3"}};
    CHECK(!validate(ok).has_value());

    CPDraft disconnected;
    disconnected.n = 3;
    disconnected.edges = {{0, 1}};
    disconnected.labels = {{"a"}, {"b"}, {"c"}};
    REQUIRE(validate(disconnected).has_value());
    CHECK(validate(disconnected)->find("disconnected") != std::string::npos);

    CPDraft cyclic;
    cyclic.n = 3;
    cyclic.edges = {{0, 1}, {1, 2}, {2, 0}};
    cyclic.labels = {{"a"}, {"b"}, {"c"}};
    REQUIRE(validate(cyclic).has_value());
    CHECK(validate(cyclic)->find("cycle") != std::string::npos);

    CPDraft empty;
    empty.n = 0;
    REQUIRE(validate(empty).has_value());
}

TEST_CASE("serialization is canonical and round-trips") {
    // Unsorted input: edges reversed, labels out of order.
    CPInstance inst = parse_cp("cp 3\nedge 2 1\nedge 1 0\nlabels 2 c a\nlabels 0 b\nlabels 1 b a\n");
    std::string canon = serialize_cp(inst);
    CHECK(canon == "cp 3\nedge 0 1\nedge 1 2\nlabels 0 b\nlabels 1 a b\nlabels 2 a c\n");
    CHECK(serialize_cp(parse_cp(canon)) == canon);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        CPInstance r = random_tree(1 + static_cast<int>(rng_below(rng, 8)), 5, 0, 4, rng);
        std::string s = serialize_cp(r);
        CHECK(serialize_cp(parse_cp(s)) == s);
    }
}

TEST_CASE("assignment serialization carries the evaluated value") {
    CPInstance inst = three_path();
    Assignment a = perms_of(inst, {{"2", "1"}, {"2", "1", "3"}, {"2", "3"}});
    CHECK(serialize_assignment(inst, a) ==
          "value 3\nperm 0 2 1\nperm 1 2 1 3\nperm 2 2 3\n");
}

TEST_CASE("empty label sets are legal") {
    CPInstance inst = parse_cp("cp 2\nedge 0 1\nlabels 0\nlabels 1 a\n");
    CHECK(inst.labels_of(0).empty());
    Assignment a;
    a.perms.resize(2);
    a.perms[1] = inst.labels_of(1);
    CHECK(evaluate(inst, a).total == 0);
    CHECK(serialize_cp(inst) == "cp 2\nedge 0 1\nlabels 0\nlabels 1 a\n");
}
