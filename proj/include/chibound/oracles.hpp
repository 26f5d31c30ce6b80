#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

// ---------------------------------------------------------------------------
// Witness types

// Pattern-vertex index -> host-vertex index.
struct embedding {
    std::vector<int> map;
};

// For induced embeddings both adjacency and non-adjacency must transfer.
inline bool validate_embedding(const graph& g, const graph& h, const embedding& e, bool induced = true) {
    if (int(e.map.size()) != h.n) return false;
    for (int v : e.map)
        if (v < 0 || v >= g.n) return false;
    for (int p = 0; p < h.n; ++p)
        for (int q = p + 1; q < h.n; ++q) {
            if (e.map[p] == e.map[q]) return false;
            bool ha = h.adjacent(p, q), ga = g.adjacent(e.map[p], e.map[q]);
            if (induced ? (ha != ga) : (ha && !ga)) return false;
        }
    return true;
}

// A complete d-partite subgraph with equal parts: parts pairwise disjoint,
// every cross-part pair adjacent; the parts themselves are unconstrained.
struct tau_witness {
    int t = 0;
    std::vector<std::vector<int>> parts;
};

inline bool validate_tau_witness(const graph& g, const tau_witness& w, int d) {
    if (int(w.parts.size()) != d) return false;
    dyn_bitset seen(g.n);
    for (const auto& part : w.parts) {
        if (int(part.size()) != w.t) return false;
        for (int v : part) {
            if (v < 0 || v >= g.n || seen.test(v)) return false;
            seen.set(v);
        }
    }
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        for (std::size_t j = i + 1; j < w.parts.size(); ++j)
            for (int u : w.parts[i])
                for (int v : w.parts[j])
                    if (!g.adjacent(u, v)) return false;
    return true;
}

inline bool is_clique(const graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool is_stable(const graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with greedy-colouring upper bounds.

namespace detail {

inline void clique_expand(const graph& g, dyn_bitset P, std::vector<int>& R, std::vector<int>& best) {
    // Greedy colouring of g[P]; colour class index bounds the clique extension.
    std::vector<int> order, col;
    dyn_bitset uncoloured = P;
    int c = 0;
    while (uncoloured.any()) {
        ++c;
        dyn_bitset avail = uncoloured;
        for (int v = avail.find_first(); v >= 0; v = avail.find_first()) {
            order.push_back(v);
            col.push_back(c);
            uncoloured.reset(v);
            avail.reset(v);
            avail.and_not(g.adj[v]);
        }
    }
    for (int i = int(order.size()) - 1; i >= 0; --i) {
        int v = order[i];
        if (int(R.size()) + col[i] <= int(best.size())) return;
        P.reset(v);
        dyn_bitset P2 = P;
        P2 &= g.adj[v];
        R.push_back(v);
        if (P2.any())
            clique_expand(g, P2, R, best);
        else if (R.size() > best.size())
            best = R;
        R.pop_back();
    }
}

} // namespace detail

// Exact maximum clique.
inline std::vector<int> max_clique(const graph& g) {
    if (g.n == 0) return {};
    std::vector<int> best, R;
    // Greedy seed.
    {
        dyn_bitset cand = dyn_bitset::full(g.n);
        for (int v = cand.find_first(); v >= 0; v = cand.find_first()) {
            best.push_back(v);
            cand.reset(v);
            cand &= g.adj[v];
        }
    }
    detail::clique_expand(g, dyn_bitset::full(g.n), R, best);
    std::sort(best.begin(), best.end());
    return best;
}

// Exact maximum stable set, as max_clique on the complement relation.
inline std::vector<int> max_stable(const graph& g) { return max_clique(complement(g)); }

// ---------------------------------------------------------------------------
// Exact chromatic number: iterative deepening with clique lower bound and
// saturation-order branching. A zero budget means unlimited.

namespace detail {

struct chroma_ctx {
    const graph& g;
    int k;
    std::vector<int> colour;
    std::vector<dyn_bitset> sat; // per-vertex set of neighbour colours (width k)
    int coloured = 0;
    long nodes = 0;
    std::chrono::steady_clock::time_point deadline;
    bool budgeted;

    void check_budget() {
        if (budgeted && (++nodes & 2047) == 0 && std::chrono::steady_clock::now() > deadline)
            throw resource_error("chromatic_number: time budget exceeded");
    }

    bool solve(int max_used) {
        check_budget();
        if (coloured == g.n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colour[v] >= 0) continue;
            int s = sat[v].count();
            int dg = g.adj[v].count();
            if (s > pick_sat || (s == pick_sat && dg > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = dg;
            }
        }
        int limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= limit; ++c) {
            if (sat[pick].test(c)) continue;
            colour[pick] = c;
            ++coloured;
            std::vector<int> bumped;
            g.adj[pick].for_each([&](int u) {
                if (colour[u] < 0 && !sat[u].test(c)) {
                    sat[u].set(c);
                    bumped.push_back(u);
                }
            });
            if (solve(std::max(max_used, c))) return true;
            for (int u : bumped) sat[u].reset(c);
            colour[pick] = -1;
            --coloured;
        }
        return false;
    }
};

inline colouring dsatur_greedy(const graph& g) {
    std::vector<int> colour(g.n, -1);
    std::vector<dyn_bitset> sat(g.n, dyn_bitset(std::max(1, g.n)));
    for (int step = 0; step < g.n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colour[v] >= 0) continue;
            int s = sat[v].count();
            int dg = g.adj[v].count();
            if (s > pick_sat || (s == pick_sat && dg > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = dg;
            }
        }
        int c = 0;
        while (sat[pick].test(c)) ++c;
        colour[pick] = c;
        g.adj[pick].for_each([&](int u) {
            if (colour[u] < 0) sat[u].set(c);
        });
    }
    return make_colouring(colour);
}

} // namespace detail

// Returns (chi, proper witness using exactly chi colours).
inline std::pair<int, colouring> chromatic_number(const graph& g, long budget_ms = 0) {
    if (g.n == 0) return {0, colouring{}};
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    std::vector<int> clique = max_clique(g);
    int lb = int(clique.size());
    colouring greedy = detail::dsatur_greedy(g);
    int ub = greedy.num_colours;
    if (lb == ub) return {ub, greedy};
    for (int k = lb; k < ub; ++k) {
        detail::chroma_ctx ctx{g, k, std::vector<int>(g.n, -1), {}, 0, 0, deadline, budget_ms > 0};
        ctx.sat.assign(g.n, dyn_bitset(k));
        // Pin a maximum clique to colours 0..lb-1; safe symmetry breaking.
        for (int i = 0; i < lb; ++i) {
            int v = clique[i];
            ctx.colour[v] = i;
            ++ctx.coloured;
            g.adj[v].for_each([&](int u) {
                if (ctx.colour[u] < 0) ctx.sat[u].set(i);
            });
        }
        if (ctx.solve(lb - 1)) return {k, make_colouring(ctx.colour)};
    }
    return {ub, greedy};
}

// ---------------------------------------------------------------------------
// Core search kernel: d pairwise-complete parts of size w avoiding a forbidden
// set, optionally with each part stable in G. Ascending choice everywhere, and
// parts ordered by least member, so the first witness found is the
// lexicographically least — deterministic for golden tests.

namespace detail {

struct core_search {
    const graph& g;
    int w, d;
    bool stable;
    std::vector<std::vector<int>> parts;

    bool rec(int pi, int slot, const dyn_bitset& cand_same, const dyn_bitset& cand_future) {
        if (slot == w) {
            if (pi + 1 == d) return true;
            // Canonical part order: next part's least vertex exceeds this one's.
            dyn_bitset next = cand_future;
            int bound = parts[pi][0];
            for (int v = next.find_first(); v >= 0 && v <= bound; v = next.find_first()) next.reset(v);
            parts.emplace_back();
            if (rec(pi + 1, 0, next, cand_future)) return true;
            parts.pop_back();
            return false;
        }
        if (cand_same.count() < w - slot) return false;
        if (cand_future.count() < w * (d - pi - 1)) return false;
        for (int v = cand_same.find_first(); v >= 0; v = cand_same.find_next(v)) {
            dyn_bitset next_same = cand_same;
            // Ascending within a part.
            for (int u = next_same.find_first(); u >= 0 && u <= v; u = next_same.find_first()) next_same.reset(u);
            if (stable) next_same.and_not(g.adj[v]);
            dyn_bitset next_future = cand_future;
            next_future &= g.adj[v];
            next_future.reset(v);
            parts[pi].push_back(v);
            if (rec(pi, slot + 1, next_same, next_future)) return true;
            parts[pi].pop_back();
        }
        return false;
    }
};

inline std::optional<std::vector<std::vector<int>>> find_parts(const graph& g, int w, int d,
                                                               const dyn_bitset& forbidden, bool stable) {
    if (w < 1 || d < 1) throw input_error("core search: w and d must be >= 1");
    dyn_bitset allowed = dyn_bitset::full(g.n);
    allowed.and_not(forbidden);
    if (allowed.count() < w * d) return std::nullopt;
    core_search cs{g, w, d, stable, {}};
    cs.parts.emplace_back();
    if (cs.rec(0, 0, allowed, allowed)) return cs.parts;
    return std::nullopt;
}

} // namespace detail

// tau_d(G): the largest t such that G has a complete d-partite subgraph with
// all parts of cardinality t. t = 0 is a legal answer.
inline std::pair<int, std::optional<tau_witness>> tau(const graph& g, int d) {
    if (d < 1) throw input_error("tau: d must be >= 1");
    if (d == 1) {
        if (g.n == 0) return {0, std::nullopt};
        tau_witness w;
        w.t = g.n;
        w.parts.emplace_back();
        for (int v = 0; v < g.n; ++v) w.parts[0].push_back(v);
        return {g.n, w};
    }
    int maxdeg = 0;
    for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    int ub = std::min(g.n / d, maxdeg / (d - 1));
    for (int t = ub; t >= 1; --t) {
        auto parts = detail::find_parts(g, t, d, dyn_bitset(g.n), false);
        if (parts) {
            tau_witness w;
            w.t = t;
            w.parts = *parts;
            return {t, w};
        }
    }
    return {0, std::nullopt};
}

// ---------------------------------------------------------------------------
// Induced subgraph detection, exhaustive. Specialized fast path for H_s,
// mirroring how the proofs assemble spiders: centre, then pairwise-nonadjacent
// branch vertices, then disjoint stable leaf sets.

namespace detail {

inline bool spider_leaves(const graph& g, int s, const std::vector<dyn_bitset>& pools, std::size_t bi,
                          dyn_bitset blocked, std::vector<std::vector<int>>& leafsets) {
    if (bi == pools.size()) return true;
    dyn_bitset pool = pools[bi];
    pool.and_not(blocked);
    // Choose s pairwise-nonadjacent vertices from pool, ascending.
    std::vector<int>& mine = leafsets[bi];
    struct walker {
        const graph& g;
        int s;
        bool operator()(dyn_bitset avail, std::vector<int>& acc) const {
            if (int(acc.size()) == s) return true;
            if (avail.count() < s - int(acc.size())) return false;
            for (int v = avail.find_first(); v >= 0; v = avail.find_next(v)) {
                dyn_bitset next = avail;
                for (int u = next.find_first(); u >= 0 && u <= v; u = next.find_first()) next.reset(u);
                next.and_not(g.adj[v]);
                acc.push_back(v);
                if ((*this)(next, acc)) return true;
                acc.pop_back();
            }
            return false;
        }
    } pick{g, s};

    // Enumerate stable s-sets of the pool; for each, try the later branches.
    struct enumerate {
        const graph& g;
        int s;
        const std::vector<dyn_bitset>& pools;
        std::size_t bi;
        std::vector<std::vector<int>>& leafsets;
        dyn_bitset base_blocked;

        bool go(dyn_bitset avail, std::vector<int>& acc) {
            if (int(acc.size()) == s) {
                dyn_bitset blocked2 = base_blocked;
                for (int v : acc) {
                    blocked2.set(v);
                    blocked2 |= g.adj[v];
                }
                return spider_leaves(g, s, pools, bi + 1, blocked2, leafsets);
            }
            if (avail.count() < s - int(acc.size())) return false;
            for (int v = avail.find_first(); v >= 0; v = avail.find_next(v)) {
                dyn_bitset next = avail;
                for (int u = next.find_first(); u >= 0 && u <= v; u = next.find_first()) next.reset(u);
                next.and_not(g.adj[v]);
                acc.push_back(v);
                if (go(next, acc)) return true;
                acc.pop_back();
            }
            return false;
        }
    } en{g, s, pools, bi, leafsets, blocked};
    (void)pick;
    mine.clear();
    return en.go(pool, mine);
}

inline std::optional<embedding> spider_search(const graph& g, int s) {
    int need = 1 + s + s * s;
    if (g.n < need) return std::nullopt;
    for (int c = 0; c < g.n; ++c) {
        if (g.degree(c) < s) continue;
        // Branch vertices: s pairwise-nonadjacent neighbours of c, each with
        // enough leaf candidates.
        std::vector<int> branches;
        struct branch_walk {
            const graph& g;
            int s, c;
            std::vector<int>& branches;
            std::optional<embedding> out;

            bool go(dyn_bitset avail) {
                if (int(branches.size()) == s) return finish();
                if (avail.count() < s - int(branches.size())) return false;
                for (int b = avail.find_first(); b >= 0; b = avail.find_next(b)) {
                    dyn_bitset next = avail;
                    for (int u = next.find_first(); u >= 0 && u <= b; u = next.find_first()) next.reset(u);
                    next.and_not(g.adj[b]);
                    branches.push_back(b);
                    if (go(next)) return true;
                    branches.pop_back();
                }
                return false;
            }

            bool finish() {
                std::vector<dyn_bitset> pools;
                for (int i = 0; i < s; ++i) {
                    dyn_bitset pool = g.adj[branches[i]];
                    pool.and_not(g.adj[c]);
                    pool.reset(c);
                    for (int j = 0; j < s; ++j) {
                        if (j == i) continue;
                        pool.and_not(g.adj[branches[j]]);
                        pool.reset(branches[j]);
                    }
                    pool.reset(branches[i]);
                    if (pool.count() < s) return false;
                    pools.push_back(pool);
                }
                std::vector<std::vector<int>> leafsets(s);
                if (!spider_leaves(g, s, pools, 0, dyn_bitset(g.n), leafsets)) return false;
                embedding e;
                e.map.assign(1 + s + s * s, -1);
                e.map[0] = c;
                for (int i = 0; i < s; ++i) {
                    e.map[1 + i] = branches[i];
                    for (int j = 0; j < s; ++j) e.map[1 + s + i * s + j] = leafsets[i][j];
                }
                out = e;
                return true;
            }
        } bw{g, s, c, branches, std::nullopt};
        if (bw.go(g.adj[c])) return bw.out;
    }
    return std::nullopt;
}

inline std::optional<embedding> general_induced(const graph& g, const graph& h) {
    // Place pattern vertices most-constrained first: grow a connected order
    // from the highest-degree pattern vertex.
    std::vector<int> order;
    {
        std::vector<char> placed(h.n, 0);
        for (int step = 0; step < h.n; ++step) {
            int pick = -1, pick_conn = -1, pick_deg = -1;
            for (int q = 0; q < h.n; ++q) {
                if (placed[q]) continue;
                int conn = 0;
                for (int p : order)
                    if (h.adjacent(p, q)) ++conn;
                int dg = h.degree(q);
                if (conn > pick_conn || (conn == pick_conn && dg > pick_deg)) {
                    pick = q;
                    pick_conn = conn;
                    pick_deg = dg;
                }
            }
            placed[pick] = 1;
            order.push_back(pick);
        }
    }
    std::vector<int> assign(h.n, -1);
    dyn_bitset used(g.n);

    struct walker {
        const graph& g;
        const graph& h;
        const std::vector<int>& order;
        std::vector<int>& assign;
        dyn_bitset& used;

        bool go(std::size_t i) {
            if (i == order.size()) return true;
            int q = order[i];
            for (int v = 0; v < g.n; ++v) {
                if (used.test(v) || g.degree(v) < h.degree(q)) continue;
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j) {
                    int p = order[j];
                    if (h.adjacent(p, q) != g.adjacent(assign[p], v)) ok = false;
                }
                if (!ok) continue;
                assign[q] = v;
                used.set(v);
                if (go(i + 1)) return true;
                used.reset(v);
                assign[q] = -1;
            }
            return false;
        }
    } wk{g, h, order, assign, used};
    if (!wk.go(0)) return std::nullopt;
    embedding e;
    e.map = assign;
    return e;
}

inline int spider_param_of(const graph& h) {
    for (int s = 1; 1 + s + s * s <= h.n; ++s) {
        if (1 + s + s * s != h.n) continue;
        graph canon = build_spider(s);
        if (canon.n != h.n) continue;
        bool same = true;
        for (int v = 0; v < h.n && same; ++v)
            if (!(h.adj[v] == canon.adj[v])) same = false;
        if (same) return s;
    }
    return 0;
}

} // namespace detail

// Finds an induced copy of H in G, or certifies none exists.
inline std::optional<embedding> find_induced(const graph& g, const graph& h) {
    if (h.n == 0) return embedding{};
    if (h.n > g.n) return std::nullopt;
    if (int s = detail::spider_param_of(h); s > 0) return detail::spider_search(g, s);
    return detail::general_induced(g, h);
}

inline bool spider_free(const graph& g, int s) { return !find_induced(g, build_spider(s)).has_value(); }

} // namespace chibound
