#include <catch2/catch_amalgamated.hpp>

#include "chibound/gen.hpp"
#include "chibound/ramsey.hpp"
#include "reference.hpp"

using namespace chibound;

namespace {
graph k(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(n, e);
}
} // namespace

TEST_CASE("ramsey_extract on K4 with x=y=2 gives a triangle") {
    auto r = ramsey_extract(k(4), 2, 2);
    REQUIRE(r.k == clique_or_stable::kind::clique);
    REQUIRE(validate_clique_or_stable(k(4), r, 2, 2));
}

TEST_CASE("ramsey_extract on P4 with x=y=2 gives a stable pair") {
    graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    // P4 has no triangle (exhaustive check), so the stable side is forced.
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            for (int w = v + 1; w < 4; ++w)
                REQUIRE(!(p4.adjacent(u, v) && p4.adjacent(v, w) && p4.adjacent(u, w)));
    auto r = ramsey_extract(p4, 2, 2);
    REQUIRE(r.k == clique_or_stable::kind::stable);
    REQUIRE(validate_clique_or_stable(p4, r, 2, 2));
}

TEST_CASE("ramsey_extract precondition") {
    REQUIRE_THROWS_AS(ramsey_extract(k(3), 2, 2), precondition_error);
    REQUIRE_THROWS_AS(ramsey_extract(k(4), 1, 2), input_error);
    REQUIRE_THROWS_AS(ramsey_extract(k(4), 2, 0), input_error);
}

TEST_CASE("ramsey_extract output consistent with oracles on 9-vertex sweep") {
    counter_rng rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        graph g = gen_graph(gen_spec{gen_uniform{9, rng.next_double()}, {}, 1}, rng.next());
        auto r = ramsey_extract(g, 3, 2); // |G| = 9 = 3^2
        REQUIRE(validate_clique_or_stable(g, r, 3, 2));
        if (r.k == clique_or_stable::kind::clique)
            REQUIRE(reference::max_clique_size(g) >= 4);
        else
            REQUIRE(reference::max_stable_size(g) >= 2);
    }
}

TEST_CASE("exhaustive 4-vertex graphs, (x,y)=(2,2)") {
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask >> bit & 1) edges.emplace_back(u, v);
        graph g = build_graph(4, edges);
        auto r = ramsey_extract(g, 2, 2);
        REQUIRE(validate_clique_or_stable(g, r, 2, 2));
    }
}
