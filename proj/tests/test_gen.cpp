#include <catch2/catch_amalgamated.hpp>

#include "chibound/gen.hpp"
#include "chibound/io.hpp"
#include "chibound/oracles.hpp"

using namespace chibound;

TEST_CASE("uniform p=0 gives edgeless graph") {
    graph g = gen_graph("uniform:n=10,p=0", 5);
    REQUIRE(g.n == 10);
    REQUIRE(g.edge_count() == 0);
}

TEST_CASE("gen determinism: identical spec+seed, identical edges") {
    for (std::uint64_t seed : {1ull, 77ull, 123456789ull}) {
        graph a = gen_graph("uniform:n=25,p=0.3", seed);
        graph b = gen_graph("uniform:n=25,p=0.3", seed);
        REQUIRE(graph_to_string(a) == graph_to_string(b));
    }
    REQUIRE(graph_to_string(gen_graph("uniform:n=25,p=0.3", 1)) !=
            graph_to_string(gen_graph("uniform:n=25,p=0.3", 2)));
}

TEST_CASE("rejection-constrained output satisfies its predicates") {
    // Induced spiders are everywhere in sparse random graphs; the H_2-free
    // regime at this size is dense.
    graph g = gen_graph("uniform:n=20,p=0.85;free=spider2", 3);
    REQUIRE(spider_free(g, 2));

    graph tf = gen_graph("uniform:n=14,p=0.25;trianglefree", 4);
    auto [t, wit] = tau(tf, 3);
    (void)wit;
    REQUIRE(t == 0); // triangle-free means no K_{1,1,1}
}

TEST_CASE("rejection budget exhaustion is an explicit error") {
    // A 3-vertex p=1 draw is a triangle every time.
    try {
        gen_graph("uniform:n=3,p=1;trianglefree;budget=7", 1);
        FAIL("expected generation_error");
    } catch (const generation_error& e) {
        REQUIRE(e.attempts == 7);
    }
}

TEST_CASE("planted core is present and recorded in the name") {
    graph g = gen_graph("core:w=2,d=2,extra=8,p=0.15", 9);
    REQUIRE(g.name.find("core=[0,1|2,3]") != std::string::npos);
    // K_{2,2} on {0,1}x{2,3} as planted
    REQUIRE(g.adjacent(0, 2));
    REQUIRE(g.adjacent(0, 3));
    REQUIRE(g.adjacent(1, 2));
    REQUIRE(g.adjacent(1, 3));
    REQUIRE(!g.adjacent(0, 1));
    REQUIRE(!g.adjacent(2, 3));
    auto [t, wit] = tau(g, 2);
    REQUIRE(t >= 2);
    REQUIRE(validate_tau_witness(g, *wit, 2));
}

TEST_CASE("planted spider stays induced") {
    graph g = gen_graph("spider:s=2,extra=23,p=0.3", 17);
    REQUIRE(g.n == 30);
    auto emb = find_induced(g, build_spider(2));
    REQUIRE(emb.has_value());
    REQUIRE(validate_embedding(g, build_spider(2), *emb));
}

TEST_CASE("incidence generator is K_{2,2}-free") {
    graph g = gen_graph("incidence:q=5", 1);
    REQUIRE(g.n == 50);
    // every pair of vertices has at most one common neighbour
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) REQUIRE(g.adj[u].count_and(g.adj[v]) <= 1);
    REQUIRE_THROWS_AS(gen_graph("incidence:q=6", 1), input_error);
}

TEST_CASE("gen spec text round trip") {
    for (const char* text : {"uniform:n=10,p=0.5", "incidence:q=7", "core:w=2,d=3,extra=5,p=0.1,stable=1",
                             "spider:s=3,extra=0,p=0", "pinned:k=2,fan=3,extra=4,p=0.2"}) {
        gen_spec spec = parse_gen_spec(text);
        gen_spec back = parse_gen_spec(gen_spec_to_string(spec));
        REQUIRE(graph_to_string(gen_graph(spec, 5)) == graph_to_string(gen_graph(back, 5)));
    }
    REQUIRE_THROWS_AS(parse_gen_spec("nonsense:x=1"), input_error);
}
