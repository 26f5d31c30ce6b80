#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chibound/bitset.hpp"
#include "chibound/errors.hpp"

namespace chibound {

// Desk-scale cap; adjacency is O(n^2) bits.
inline constexpr int max_vertices = 1 << 16;

// Undirected simple graph on vertices 0..n-1. Immutable after construction by
// convention: every operation takes graphs by const reference and builds new
// ones, so concurrent readers are safe.
struct graph {
    int n = 0;
    std::vector<dyn_bitset> adj;
    std::string name;

    bool adjacent(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }

    long edge_count() const {
        long twice = 0;
        for (const auto& a : adj) twice += a.count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].find_next(u); v >= 0; v = adj[u].find_next(v)) out.emplace_back(u, v);
        return out;
    }
};

inline graph make_empty_graph(int n, std::string name = "") {
    if (n < 0 || n > max_vertices) throw input_error("graph: vertex count out of range");
    graph g;
    g.n = n;
    g.adj.assign(n, dyn_bitset(n));
    g.name = std::move(name);
    return g;
}

inline void add_edge(graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw input_error("add_edge: endpoint out of range");
    if (u == v) throw input_error("add_edge: self-loop");
    g.adj[u].set(v);
    g.adj[v].set(u);
}

// Symmetric closure of the edge list; duplicates collapse.
inline graph build_graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name = "") {
    graph g = make_empty_graph(n, std::move(name));
    for (auto [u, v] : edges) add_edge(g, u, v);
    return g;
}

// H_s: centre 0 of degree s, branch vertices 1..s, each with s pendant leaves.
// Leaf j of branch i sits at 1 + s + i*s + j.
inline graph build_spider(int s) {
    if (s < 1) throw input_error("build_spider: s must be >= 1");
    graph g = make_empty_graph(1 + s + s * s, "H_" + std::to_string(s));
    for (int i = 0; i < s; ++i) {
        add_edge(g, 0, 1 + i);
        for (int j = 0; j < s; ++j) add_edge(g, 1 + i, 1 + s + i * s + j);
    }
    return g;
}

inline int spider_centre() { return 0; }
inline int spider_branch(int /*s*/, int i) { return 1 + i; }
inline int spider_leaf(int s, int i, int j) { return 1 + s + i * s + j; }

inline graph complement(const graph& g) {
    graph c = make_empty_graph(g.n, g.name.empty() ? "" : g.name + "~");
    for (int v = 0; v < g.n; ++v) {
        c.adj[v] = g.adj[v].complement();
        if (v < g.n) c.adj[v].reset(v);
    }
    return c;
}

struct induced_result {
    graph g;
    std::vector<int> vmap; // output index -> input vertex, ascending
};

inline induced_result induced_subgraph(const graph& g, const dyn_bitset& S) {
    if (S.size() != g.n) throw input_error("induced_subgraph: set width mismatch");
    induced_result r;
    r.vmap = S.to_vector();
    r.g = make_empty_graph(int(r.vmap.size()), g.name);
    for (std::size_t i = 0; i < r.vmap.size(); ++i)
        for (std::size_t j = i + 1; j < r.vmap.size(); ++j)
            if (g.adjacent(r.vmap[i], r.vmap[j])) add_edge(r.g, int(i), int(j));
    return r;
}

inline induced_result induced_subgraph(const graph& g, const std::vector<int>& members) {
    for (int v : members)
        if (v < 0 || v >= g.n) throw input_error("induced_subgraph: member out of range");
    return induced_subgraph(g, dyn_bitset::of(g.n, members));
}

// "A is complete to B": every a in A is adjacent to every b in B \ {a}.
inline bool complete_between(const graph& g, const dyn_bitset& A, const dyn_bitset& B) {
    bool ok = true;
    A.for_each([&](int a) {
        if (!ok) return;
        dyn_bitset need = B;
        need.reset(a);
        if (!need.is_subset_of(g.adj[a])) ok = false;
    });
    return ok;
}

inline bool anticomplete_between(const graph& g, const dyn_bitset& A, const dyn_bitset& B) {
    bool ok = true;
    A.for_each([&](int a) {
        if (!ok) return;
        dyn_bitset hit = g.adj[a];
        hit &= B;
        hit.reset(a);
        if (hit.any()) ok = false;
    });
    return ok;
}

// Directed graph used by the splitting lemmas only. Antiparallel arcs allowed.
struct digraph {
    int n = 0;
    std::vector<dyn_bitset> out;

    bool arc(int u, int v) const { return out[u].test(v); }
    int out_degree(int v) const { return out[v].count(); }
};

inline digraph make_digraph(int n) {
    if (n < 0 || n > max_vertices) throw input_error("digraph: vertex count out of range");
    digraph d;
    d.n = n;
    d.out.assign(n, dyn_bitset(n));
    return d;
}

inline void add_arc(digraph& d, int u, int v) {
    if (u < 0 || v < 0 || u >= d.n || v >= d.n) throw input_error("add_arc: endpoint out of range");
    if (u == v) throw input_error("add_arc: self-loop");
    d.out[u].set(v);
}

// Vertex -> colour class. Properness is a checkable predicate, never assumed.
struct colouring {
    std::vector<int> assignment;
    int num_colours = 0;
};

inline colouring make_colouring(std::vector<int> assignment) {
    colouring c;
    c.assignment = std::move(assignment);
    std::vector<char> seen;
    for (int x : c.assignment) {
        if (x < 0) throw input_error("colouring: negative colour");
        if (std::size_t(x) >= seen.size()) seen.resize(x + 1, 0);
        seen[x] = 1;
    }
    c.num_colours = int(std::count(seen.begin(), seen.end(), 1));
    return c;
}

// Returns the lexicographically least violating edge, or nullopt when proper.
inline std::optional<std::pair<int, int>> validate_colouring(const graph& g, const colouring& c) {
    if (int(c.assignment.size()) != g.n) throw input_error("validate_colouring: assignment not total on V(G)");
    for (int x : c.assignment)
        if (x < 0) throw input_error("validate_colouring: assignment not total on V(G)");
    for (int u = 0; u < g.n; ++u)
        for (int v = g.adj[u].find_next(u); v >= 0; v = g.adj[u].find_next(v))
            if (c.assignment[u] == c.assignment[v]) return std::make_pair(u, v);
    return std::nullopt;
}

} // namespace chibound
