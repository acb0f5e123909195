#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "ng/neighborhoods.hpp"
#include "ng/subgraphs.hpp"

using namespace ng;

namespace {

// O(n^v) reference counter used to freeze the optimized embedders
uint64_t brute_count(const GraphTable& gt, const PatternGraph& H) {
    std::vector<uint32_t> map(H.v);
    std::vector<bool> used(gt.n(), false);
    uint64_t total = 0;
    auto rec = [&](auto&& self, uint32_t i) -> void {
        if (i == H.v) {
            ++total;
            return;
        }
        for (uint32_t m = 0; m < gt.n(); ++m) {
            if (used[m]) continue;
            bool ok = true;
            for (auto [x, y] : H.edges) {
                uint32_t other = x == i ? y : (y == i ? x : H.v);
                if (other < i && !gt.adj(m, map[other])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[i] = m;
            used[m] = true;
            self(self, i + 1);
            used[m] = false;
        }
    };
    rec(rec, 0);
    return total;
}

PatternGraph relabel(const PatternGraph& H, const std::vector<uint32_t>& perm) {
    PatternGraph out{H.v, {}};
    for (auto [i, j] : H.edges) out.edges.emplace_back(perm[i], perm[j]);
    return out;
}

} // namespace

TEST_CASE("pattern parsing and validation") {
    auto H = parse_pattern("3 2\n0 1\n1 2\n");
    CHECK(H.v == 3);
    CHECK(H.edges.size() == 2);

    CHECK_THROWS_AS(parse_pattern(""), invalid_input);
    CHECK_THROWS_AS(parse_pattern("3 1\n0 3\n"), invalid_input);
    CHECK_THROWS_AS(parse_pattern("3 1\n1 1\n"), invalid_input);
    CHECK_THROWS_AS(parse_pattern("3 2\n0 1\n1 0\n"), invalid_input);
    CHECK_THROWS_AS(parse_pattern("3 1\n0 1\n0 2\n"), invalid_input);
    CHECK_THROWS_AS(parse_pattern("0 0\n"), invalid_input);

    CHECK(pattern_complete(4).edges.size() == 6);
    CHECK(pattern_complete_bipartite(3, 3).edges.size() == 9);
    CHECK(pattern_path(4).edges.size() == 3);
    CHECK(pattern_cycle(4).edges.size() == 4);
    CHECK_THROWS_AS(pattern_cycle(2), invalid_input);
}

TEST_CASE("degeneracy orderings") {
    auto c4 = degeneracy_order(pattern_cycle(4));
    CHECK(c4.degeneracy == 2);
    CHECK(c4.back_deg == std::vector<uint32_t>{0, 1, 1, 2});

    auto k4 = degeneracy_order(pattern_complete(4));
    CHECK(k4.degeneracy == 3);
    CHECK(k4.back_deg == std::vector<uint32_t>{0, 1, 2, 3});

    auto k33 = degeneracy_order(pattern_complete_bipartite(3, 3));
    CHECK(k33.degeneracy == 3);

    auto p4 = degeneracy_order(pattern_path(4));
    CHECK(p4.degeneracy == 1);

    // orderings are permutations
    auto ord = k33.order;
    std::sort(ord.begin(), ord.end());
    for (uint32_t i = 0; i < 6; ++i) CHECK(ord[i] == i);
}

TEST_CASE("optimized counts match the reference embedder") {
    std::vector<PatternGraph> pats = {
        pattern_complete(2),  pattern_path(3),   pattern_complete(3),
        pattern_cycle(4),     pattern_path(4),   pattern_cycle(5),
        pattern_complete_bipartite(1, 3), pattern_complete(4),
        parse_pattern("4 0\n"),                    // edgeless
        parse_pattern("5 5\n0 1\n1 2\n2 0\n2 3\n3 4\n"),   // triangle + tail
    };
    for (auto [p, k, t] : {std::tuple<uint64_t, uint32_t, uint32_t>{3, 1, 2}, {3, 1, 3}}) {
        auto gc = GraphCtx::make(p, k, t);
        auto gt = GraphTable::build(gc);
        for (const auto& H : pats) {
            CAPTURE(H.v);
            CAPTURE(H.edges.size());
            CHECK(count_labeled(gt, H) == brute_count(gt, H));
        }
    }
    // even q, bipartite fast path vs reference
    auto gc = GraphCtx::make(2, 2, 3);
    auto gt = GraphTable::build(gc);
    for (const auto& H : {pattern_complete_bipartite(2, 2), pattern_complete(3)})
        CHECK(count_labeled(gt, H) == brute_count(gt, H));
}

TEST_CASE("edge count pin and simple identities") {
    auto gc = GraphCtx::make(3, 1, 2);
    auto gt = GraphTable::build(gc);
    CHECK(count_labeled(gt, pattern_complete(2)) == 10);   // five simple edges
    CHECK(count_labeled(gt, pattern_complete(2)) == 2 * census(gc).e_simple);

    // a cycle is the same labeled graph as the complete bipartite square
    auto gc5 = GraphCtx::make(5, 1, 3);
    auto gt5 = GraphTable::build(gc5);
    CHECK(count_labeled(gt5, pattern_cycle(4)) ==
          count_labeled(gt5, pattern_complete_bipartite(2, 2)));
}

TEST_CASE("relabeling the pattern never changes the count") {
    auto gc = GraphCtx::make(5, 1, 3);
    auto gt = GraphTable::build(gc);
    std::mt19937_64 rng(11);
    for (const auto& H : {pattern_complete(4), pattern_cycle(5),
                          parse_pattern("5 5\n0 1\n1 2\n2 0\n2 3\n3 4\n"),
                          pattern_complete_bipartite(2, 3)}) {
        uint64_t base = count_labeled(gt, H);
        for (int it = 0; it < 5; ++it) {
            std::vector<uint32_t> perm(H.v);
            for (uint32_t i = 0; i < H.v; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(count_labeled(gt, relabel(H, perm)) == base);
        }
    }
}

TEST_CASE("automorphism divisibility of labeled counts") {
    auto gc = GraphCtx::make(5, 1, 3);
    auto gt = GraphTable::build(gc);
    CHECK(count_labeled(gt, pattern_complete(2)) % 2 == 0);
    CHECK(count_labeled(gt, pattern_path(3)) % 2 == 0);
    CHECK(count_labeled(gt, pattern_cycle(4)) % 8 == 0);
    CHECK(count_labeled(gt, pattern_complete(3)) % 6 == 0);

    auto gc4 = GraphCtx::make(5, 1, 4);
    auto gt4 = GraphTable::build(gc4);
    CHECK(count_labeled(gt4, pattern_complete(4)) % 24 == 0);
}

TEST_CASE("triangles exist at t = 3") {
    for (auto [p, k] : {std::pair<uint64_t, uint32_t>{3, 1}, {2, 2}, {5, 1}}) {
        auto gc = GraphCtx::make(p, k, 3);
        auto gt = GraphTable::build(gc);
        CHECK(count_labeled(gt, pattern_complete(3)) > 0);
    }
}

TEST_CASE("monotonicity under edge removal") {
    auto gc = GraphCtx::make(5, 1, 4);
    auto gt = GraphTable::build(gc);
    auto k4 = pattern_complete(4);
    auto k4_minus = k4;
    k4_minus.edges.pop_back();
    uint64_t full = count_labeled(gt, k4);
    uint64_t minus = count_labeled(gt, k4_minus);
    CHECK(full > 0);
    CHECK(full <= minus * gc.n_vertices());

    auto gc3 = GraphCtx::make(5, 1, 3);
    auto gt3 = GraphTable::build(gc3);
    CHECK(count_labeled(gt3, pattern_cycle(4)) <=
          count_labeled(gt3, pattern_path(4)) * gc3.n_vertices());
}

TEST_CASE("forbidden complete bipartite patterns") {
    auto gc43 = GraphCtx::make(2, 2, 3);
    auto gt43 = GraphTable::build(gc43);
    CHECK(count_labeled(gt43, pattern_complete_bipartite(3, 3)) == 0);
    // but the graph is rich enough to host K_{2,2}
    CHECK(count_labeled(gt43, pattern_complete_bipartite(2, 2)) > 0);

    auto gc54 = GraphCtx::make(5, 1, 4);
    auto gt54 = GraphTable::build(gc54);
    CHECK(count_labeled(gt54, pattern_complete_bipartite(4, 7)) == 0);
    CHECK(count_labeled(gt54, pattern_complete_bipartite(4, 6)) > 0);
}

TEST_CASE("quasirandomness reports") {
    auto gc3 = GraphCtx::make(5, 1, 3);
    auto gt3 = GraphTable::build(gc3);
    for (const auto& H : {pattern_path(3), pattern_cycle(4), pattern_complete(3)}) {
        auto rep = quasirandom_ratio(gt3, H);
        CHECK(rep.deviation_band);
        CHECK(rep.ratio > 0.0);
        CHECK(rep.dev_constant <= 3.0);
    }

    auto gc4 = GraphCtx::make(5, 1, 4);
    auto gt4 = GraphTable::build(gc4);
    auto rep = quasirandom_ratio(gt4, pattern_complete(4));
    CHECK(rep.degeneracy == 3);
    CHECK(!rep.deviation_band);
    CHECK(rep.window_low == 1.0);
    CHECK(rep.window_high == 2.0);   // one back-degree-3 position
    CHECK(rep.ratio >= 0.5);
    CHECK(rep.ratio <= 4.0);

    auto gc43 = GraphCtx::make(2, 2, 3);
    auto gt43 = GraphTable::build(gc43);
    auto rep33 = quasirandom_ratio(gt43, pattern_complete_bipartite(3, 3));
    CHECK(rep33.count == 0);
    CHECK(rep33.degeneracy == 3);
    CHECK(!rep33.deviation_band);
    CHECK(rep33.window_high == 1.0);   // no annotated band at t = 3
}

TEST_CASE("degree extrema closed forms and sweeps") {
    auto gc53 = GraphCtx::make(5, 1, 3);
    auto d1 = degree_extrema(gc53, 1);
    CHECK(d1.exact);
    CHECK(d1.dmax == 24);
    CHECK(d1.dmin == 24);

    auto d2 = degree_extrema(gc53, 2);
    CHECK(d2.exact);
    CHECK(d2.dmax == 6);
    CHECK(d2.dmin == 5);

    auto gc74 = GraphCtx::make(7, 1, 4);
    auto d3 = degree_extrema(gc74, 3);
    CHECK(d3.exact);
    CHECK(d3.dmax == 14);
    REQUIRE(d3.argmax_classes.size() == 1);
    CHECK(d3.argmax_classes[0] == std::pair<uint64_t, uint64_t>{1, 6});   // (1, -1)

    CHECK_THROWS_AS(degree_extrema(gc53, 0), invalid_input);
    CHECK_THROWS_AS(degree_extrema(gc53, 5), invalid_input);
}

TEST_CASE("class sweep agrees with brute force on a small instance") {
    auto gc = GraphCtx::make(3, 1, 3);
    auto d3 = degree_extrema(gc, 3);
    REQUIRE(d3.exact);

    // brute force over all generic triples of the materialized graph
    auto verts = gc.all_vertices();
    uint64_t bmax = 0, bmin = ~0ull;
    const auto& F = gc.big();
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            for (size_t k = j + 1; k < verts.size(); ++k) {
                std::vector<Vertex> T = {verts[i], verts[j], verts[k]};
                if (F.eq(T[0].A, T[1].A) || F.eq(T[0].A, T[2].A) || F.eq(T[1].A, T[2].A))
                    continue;
                uint64_t deg = common_neighborhood_bruteforce(gc, T).size();
                bmax = std::max(bmax, deg);
                bmin = std::min(bmin, deg);
            }
    CHECK(d3.dmax == bmax);
    CHECK(d3.dmin == bmin);
}

TEST_CASE("quadruple extrema: exhaustive when small, sampled when large") {
    auto gc33 = GraphCtx::make(3, 1, 3);
    auto small = degree_extrema(gc33, 4);
    CHECK(small.exact);
    CHECK(small.dmax <= small.upper_bound);

    auto gc54 = GraphCtx::make(5, 1, 4);
    auto big = degree_extrema(gc54, 4, 10000000, 300, 7);
    CHECK(!big.exact);
    CHECK(big.upper_bound == 6);
    CHECK(big.dmax <= 6);
    CHECK(big.dmin <= big.dmax);
}

TEST_CASE("budget control") {
    auto gc = GraphCtx::make(5, 1, 4);
    auto gt = GraphTable::build(gc);
    CHECK_THROWS_AS(count_labeled(gt, pattern_complete_bipartite(4, 7), 1000),
                    budget_exceeded);

    setenv("NGLAB_BUDGET", "123", 1);
    CHECK(default_budget() == 123);
    setenv("NGLAB_BUDGET", "junk", 1);
    CHECK(default_budget() == 1000000000ull);
    unsetenv("NGLAB_BUDGET");
    CHECK(default_budget() == 1000000000ull);

    // a tiny explicit budget still suffices for a tiny instance
    auto gc32 = GraphCtx::make(3, 1, 2);
    auto gt32 = GraphTable::build(gc32);
    CHECK(count_labeled(gt32, pattern_complete(2), 100) == 10);
}
