#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <queue>

#include "ng/normgraph.hpp"

using namespace ng;

TEST_CASE("census closed forms (with built-in exhaustive verification)") {
    {
        auto gc = GraphCtx::make(3, 1, 2);
        auto c = census(gc);
        CHECK(c.n == 6);
        CHECK(c.e_simple == 5);
        CHECK(c.loops == 2);
        CHECK(!c.complete);
    }
    {
        auto gc = GraphCtx::make(2, 2, 2);   // q = 4
        auto c = census(gc);
        CHECK(c.n == 12);
        CHECK(c.e_simple == 18);
        CHECK(c.loops == 0);
    }
    {
        auto gc = GraphCtx::make(3, 1, 3);
        auto c = census(gc);
        CHECK(c.n == 18);
        CHECK(c.loops == 8);    // q^{t-1} - 1
        CHECK(c.e_simple == (9ull - 1) * (9 * 2 - 1) / 2);
    }
    {
        auto gc = GraphCtx::make(5, 1, 3);
        auto c = census(gc);
        CHECK(c.n == 100);
        CHECK(c.loops == 24);
    }
    {
        auto gc = GraphCtx::make(3, 1, 4);
        auto c = census(gc);
        CHECK(c.n == 54);
        CHECK(c.loops == 26);
    }
}

TEST_CASE("NG(2,t) is complete") {
    auto gc = GraphCtx::make(2, 1, 3);
    auto c = census(gc);
    CHECK(c.complete);
    CHECK(c.n == 4);
    auto vs = gc.all_vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            CHECK(gc.is_adjacent(vs[i], vs[j]));
    CHECK(c.e_simple == c.n * (c.n - 1) / 2);
}

TEST_CASE("norm values land in the subfield; N(X)=1 in NG(3,3)") {
    auto gc = GraphCtx::make(3, 1, 3);
    Fe X = gc.big().from_coeffs({0, 1});
    CHECK(gc.big().eq(gc.norm(X), gc.big().one()));   // X^4 = 1 in F_9
    for (uint64_t v = 0; v < gc.big().size(); ++v) {
        Fe x = gc.big().from_int(v);
        CHECK(gc.in_subfield(gc.norm(x)));
    }
    // norm fibers over F_q^* all have size (q^{t-1}-1)/(q-1)
    for (const Fe& target : gc.subfield_elements()) {
        if (gc.big().is_zero(target)) continue;
        uint64_t fiber = 0;
        for (uint64_t v = 0; v < gc.big().size(); ++v)
            if (gc.big().eq(gc.norm(gc.big().from_int(v)), target)) ++fiber;
        CHECK(fiber == 4);
    }
}

TEST_CASE("adjacency oracle basics") {
    auto gc = GraphCtx::make(3, 1, 2);
    // loops of NG(3,2) are exactly (2,1) and (2,2)
    int loops = 0;
    for (const auto& v : gc.all_vertices()) {
        if (gc.is_loop(v)) {
            ++loops;
            CHECK(gc.big().to_int(v.A) == 2);
        }
    }
    CHECK(loops == 2);

    // symmetry on all pairs of a slightly bigger instance
    auto gc2 = GraphCtx::make(5, 1, 3);
    auto vs = gc2.all_vertices();
    for (size_t i = 0; i < vs.size(); i += 7)
        for (size_t j = 0; j < vs.size(); j += 5)
            CHECK(gc2.is_adjacent(vs[i], vs[j]) == gc2.is_adjacent(vs[j], vs[i]));

    CHECK_THROWS_AS(gc.vertex(gc.big().one(), gc.big().zero()), invalid_input);
}

TEST_CASE("neighbor streams") {
    auto gc = GraphCtx::make(3, 1, 3);
    auto vs = gc.all_vertices();
    for (const auto& v : vs) {
        auto nb = gc.neighbors(v);
        CHECK(nb.size() == gc.big().size() - 1);
        bool self = false;
        for (const auto& w : nb) {
            CHECK(gc.is_adjacent(v, w));
            if (w == v) self = true;
        }
        CHECK(self == gc.is_loop(v));
        // deterministic order: ascending first coordinate encoding
        for (size_t i = 1; i < nb.size(); ++i)
            CHECK(gc.big().to_int(nb[i - 1].A) < gc.big().to_int(nb[i].A));
    }
}

TEST_CASE("classification of vertex sets") {
    auto gc = GraphCtx::make(5, 1, 3);
    auto v = [&](uint64_t A, uint64_t a) { return gc.vertex_from_ints(A, a); };
    CHECK(classify_set(gc, {v(1, 1), v(2, 3)}) == SetClass::generic);
    CHECK(classify_set(gc, {v(1, 2), v(3, 2), v(4, 2)}) == SetClass::aligned_generic);
    CHECK(classify_set(gc, {v(1, 1), v(1, 2)}) == SetClass::non_generic);
    CHECK(is_generic(gc, {v(1, 2), v(3, 2)}));
    CHECK(!is_generic(gc, {v(2, 1), v(2, 4)}));
}

TEST_CASE("vertex indexing matches all_vertices order") {
    auto gc = GraphCtx::make(2, 2, 3);   // q=4, even characteristic path
    auto vs = gc.all_vertices();
    CHECK(vs.size() == gc.n_vertices());
    for (uint64_t i = 0; i < vs.size(); ++i)
        CHECK(gc.vertex_index(vs[i]) == i);
}

TEST_CASE("graph table agrees with oracle and the graph is connected") {
    for (auto [p, k, t] : {std::tuple<uint64_t, uint32_t, uint32_t>{3, 1, 3},
                           {2, 2, 3},
                           {5, 1, 3},
                           {3, 1, 4}}) {
        auto gc = GraphCtx::make(p, k, t);
        auto T = GraphTable::build(gc);
        auto vs = T.verts();
        for (uint32_t i = 0; i < T.n(); ++i) {
            CHECK(T.loop(i) == gc.is_loop(vs[i]));
            for (uint32_t j = 0; j < T.n(); ++j) {
                bool expect = (i != j) && gc.is_adjacent(vs[i], vs[j]);
                CHECK(T.adj(i, j) == expect);
            }
        }
        // BFS over simple edges
        std::vector<char> seen(T.n(), 0);
        std::queue<uint32_t> bfs;
        bfs.push(0);
        seen[0] = 1;
        uint32_t reached = 1;
        while (!bfs.empty()) {
            uint32_t u = bfs.front();
            bfs.pop();
            for (uint32_t j = 0; j < T.n(); ++j)
                if (T.adj(u, j) && !seen[j]) {
                    seen[j] = 1;
                    ++reached;
                    bfs.push(j);
                }
        }
        CHECK(reached == T.n());
    }
}
