#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cprefix/generate.hpp"
#include "test_support.hpp"

using namespace cprefix;

TEST_CASE("rng helpers") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) CHECK(rng_below(rng, 7) < 7);
    for (int t = 0; t < 50; ++t) {
        CHECK(!rng_chance(rng, 0.0));
        CHECK(rng_chance(rng, 1.0));
    }
}

TEST_CASE("gen_binary_tree") {
    SUBCASE("every vertex has at most two children under root 0") {
        std::mt19937_64 rng(2);
        for (int t = 0; t < 30; ++t) {
            int n = 1 + static_cast<int>(rng_below(rng, 40));
            CPInstance inst = gen_binary_tree(n, {5, 1, 3}, rng());
            CHECK(inst.vertex_count() == n);
            // Child of edge (u,v) with u < v is always v: vertices attach to
            // earlier vertices, so parent id < child id.
            std::vector<int> children(n, 0);
            for (const Edge& e : inst.edges()) ++children[e.u < e.v ? e.u : e.v];
            for (int v = 0; v < n; ++v) CHECK(children[v] <= 2);
        }
    }
    SUBCASE("label sizes stay in range") {
        CPInstance inst = gen_binary_tree(25, {4, 2, 3}, 7);
        for (int v = 0; v < 25; ++v) {
            CHECK(inst.labels_of(v).size() >= 2);
            CHECK(inst.labels_of(v).size() <= 3);
        }
    }
    SUBCASE("deterministic per seed") {
        CHECK(serialize_cp(gen_binary_tree(20, {4, 1, 3}, 5)) ==
              serialize_cp(gen_binary_tree(20, {4, 1, 3}, 5)));
        CHECK(serialize_cp(gen_binary_tree(20, {4, 1, 3}, 5)) !=
              serialize_cp(gen_binary_tree(20, {4, 1, 3}, 6)));
    }
    SUBCASE("single vertex") {
        CHECK(gen_binary_tree(1, {3, 1, 2}, 0).vertex_count() == 1);
    }
    SUBCASE("range clamps to the universe") {
        CPInstance inst = gen_binary_tree(6, {2, 1, 5}, 3);
        for (int v = 0; v < 6; ++v) CHECK(inst.labels_of(v).size() <= 2);
    }
    CHECK_THROWS_AS(gen_binary_tree(0, {3, 1, 2}, 0), ValidationError);
}

TEST_CASE("gen_star") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        int n = 1 + static_cast<int>(rng_below(rng, 8));
        CPInstance star = gen_star(n, {5, 1, 4}, rng());
        for (const Edge& e : star.edges()) CHECK(e.u == 0);
    }
    CHECK(serialize_cp(gen_star(6, {5, 1, 4}, 11)) ==
          serialize_cp(gen_star(6, {5, 1, 4}, 11)));
}

TEST_CASE("gen_bipartite") {
    CHECK(gen_bipartite(4, 5, 0.0, 1).edge_count() == 0);
    CHECK(gen_bipartite(4, 5, 1.0, 1).edge_count() == 20);
    CHECK(serialize_nn(gen_bipartite(6, 6, 0.5, 9)) ==
          serialize_nn(gen_bipartite(6, 6, 0.5, 9)));
    CHECK_THROWS_AS(gen_bipartite(2, 2, 1.5, 0), ValidationError);
    CHECK_THROWS_AS(gen_bipartite(-1, 2, 0.5, 0), ValidationError);
}
