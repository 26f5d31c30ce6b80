#include <catch2/catch_amalgamated.hpp>

#include "chibound/gen.hpp"
#include "chibound/ramsey.hpp"

using namespace chibound;

namespace {

// Split the first k*size vertices of g into k consecutive lists.
std::vector<dyn_bitset> consecutive_lists(const graph& g, int k, int size) {
    REQUIRE(g.n >= k * size);
    std::vector<dyn_bitset> lists;
    for (int i = 0; i < k; ++i) {
        dyn_bitset L(g.n);
        for (int v = i * size; v < (i + 1) * size; ++v) L.set(v);
        lists.push_back(L);
    }
    return lists;
}

// Seeded disjoint lists drawn from the whole vertex range.
std::vector<dyn_bitset> random_lists(const graph& g, int k, int size, counter_rng& rng) {
    REQUIRE(g.n >= k * size);
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[std::size_t(i)] = i;
    for (int i = g.n - 1; i > 0; --i) std::swap(perm[std::size_t(i)], perm[rng.below(std::uint64_t(i) + 1)]);
    std::vector<dyn_bitset> lists;
    int at = 0;
    for (int i = 0; i < k; ++i) {
        dyn_bitset L(g.n);
        for (int j = 0; j < size; ++j) L.set(perm[std::size_t(at++)]);
        lists.push_back(L);
    }
    return lists;
}

graph k_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(n, e);
}

} // namespace

TEST_CASE("levels params struct") {
    auto lp = levels_params(2, 2, 1, 1, 2);
    REQUIRE(lp.k == 4);
    REQUIRE(lp.p == 1024);
    REQUIRE_THROWS_AS(levels_params(2, 1, 0, 1, 1), input_error);
}

TEST_CASE("levels_extract on an edgeless host picks the first lists greedily") {
    graph g = make_empty_graph(40);
    auto lp = levels_params(2, 0, 2, 1, 1); // k = 5, p = 2^5 = 32? no: p = 2^5 * 1 = 32 > 8
    // use b=1 instead to keep p small: k=3, p=8
    lp = levels_params(2, 1, 1, 1, 1);
    REQUIRE(lp.k == 3);
    REQUIRE(lp.p == 8);
    auto lists = consecutive_lists(g, 3, 10);
    auto out = levels_extract(g, lists, lp, true);
    auto* sys = std::get_if<stable_system>(&out);
    REQUIRE(sys != nullptr);
    REQUIRE(validate_stable_system(g, lists, lp, *sys));
    REQUIRE(sys->I == std::vector<int>{0});
}

TEST_CASE("levels_extract b=0 contract: index 0 joins with empty quota") {
    graph g = make_empty_graph(200);
    auto lp = levels_params(2, 0, 2, 1, 1); // k = (2*1)^2 + 1 = 5, p = 32
    REQUIRE(lp.k == 5);
    REQUIRE(lp.p == 32);
    auto lists = consecutive_lists(g, 5, 40);
    auto out = levels_extract(g, lists, lp);
    auto* sys = std::get_if<stable_system>(&out);
    REQUIRE(sys != nullptr);
    REQUIRE(validate_stable_system(g, lists, lp, *sys));
    REQUIRE(std::find(sys->I.begin(), sys->I.end(), 0) != sys->I.end());
    REQUIRE(sys->per_list.at(0).empty());
}

TEST_CASE("levels_extract refutes a lied tau hypothesis with a witness") {
    // K_16 with params claiming tau_2 < 1: any edge is a K_{1,1}.
    graph g = k_complete(16);
    auto lp = levels_params(2, 2, 1, 1, 1); // k=4, p=16
    REQUIRE(lp.p == 16);
    std::vector<dyn_bitset> lists = consecutive_lists(g, 4, 4);
    // lists of size 4 < p=16: precondition must fire
    REQUIRE_THROWS_AS(levels_extract(g, lists, lp), precondition_error);

    graph g64 = k_complete(64);
    auto lists64 = consecutive_lists(g64, 4, 16);
    auto out = levels_extract(g64, lists64, lp);
    auto* wit = std::get_if<tau_witness>(&out);
    REQUIRE(wit != nullptr);
    REQUIRE(wit->t == 1);
    REQUIRE(validate_tau_witness(g64, *wit, 2));

    // t=2 route: the c=1 base meets a clique of (d+1)t = 4 via ramsey.
    auto lp2 = levels_params(2, 2, 1, 1, 2); // k=4, p=1024
    graph big = k_complete(4096);
    auto biglists = consecutive_lists(big, 4, 1024);
    auto out2 = levels_extract(big, biglists, lp2);
    auto* wit2 = std::get_if<tau_witness>(&out2);
    REQUIRE(wit2 != nullptr);
    REQUIRE(wit2->t == 2);
    REQUIRE(validate_tau_witness(big, *wit2, 2));
}

TEST_CASE("levels_extract d=0 is an impossible precondition") {
    graph g = make_empty_graph(10);
    REQUIRE_THROWS_AS(levels_extract(g, {}, levels_params(2, 1, 1, 0, 1)), precondition_error);
}

TEST_CASE("levels_extract on K_{2,2}-free incidence hosts") {
    graph host = gen_graph("incidence:q=11", 1); // 242 vertices, tau_2 = 1
    counter_rng rng(55);
    // a=2, b=1, c=1, d=1, t=2: k = 3, p = 2^3 * 2^5 = 256? a(c+d)+b = 5 -> 2^3*32 = 256
    auto lp = levels_params(2, 1, 1, 1, 2);
    REQUIRE(lp.k == 3);
    REQUIRE(lp.p == 256);
    // 242 < 3*256: too small for that point; use b=0: k=1? b=0,c=1 -> k=1, p=2*16=32
    auto lp0 = levels_params(2, 0, 1, 1, 2);
    REQUIRE(lp0.k == 1);
    for (int trial = 0; trial < 10; ++trial) {
        auto lists = random_lists(host, 1, 80, rng);
        auto out = levels_extract(host, lists, lp0);
        auto* sys = std::get_if<stable_system>(&out);
        REQUIRE(sys != nullptr);
        REQUIRE(validate_stable_system(host, lists, lp0, *sys));
    }
}

TEST_CASE("levels2 wrapper: a=b=c=s quotas") {
    // s=2, d=1: k = s^{2d+2} = 16 lists, p = 2^16 * t^{s(s+d)+...}
    // use t=1 so p = 2^16 — too big for a unit test; check the parameter wiring instead
    auto lp = levels_params(2, 2, 2, 1, 1);
    REQUIRE(lp.k == 16);
    REQUIRE(lp.p == pow2(bigint(16)));
    graph g = make_empty_graph(8);
    REQUIRE_THROWS_AS(levels2_extract(g, consecutive_lists(g, 2, 2), 2, 1, 1), precondition_error);
}
