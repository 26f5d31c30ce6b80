#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/oracles.hpp"
#include "chibound/prng.hpp"

namespace chibound {

// Generator descriptors. gen_graph(spec, seed) is a pure function of its
// arguments; all randomness flows through the counter-based rng.

struct gen_uniform {
    int n = 0;
    double p = 0.0;
};

// Point-line incidence graph of the affine plane over Z_q (q prime):
// point (x,y) ~ line (a,b) iff y = ax + b. Girth >= 6, so K_{2,2}-free.
struct gen_incidence {
    int q = 0;
};

// Complete d-partite core on the first w*d vertices (parts consecutive),
// plus `extra` noise vertices wired with probability p. Noise never touches
// pairs inside the planted core, so the structure survives.
struct gen_planted_core {
    int w = 1;
    int d = 2;
    int extra = 0;
    double p = 0.0;
    bool stable = true;
};

// H_s on the first 1+s+s^2 vertices; noise only outside the spider's vertex
// set, which keeps that copy induced.
struct gen_planted_spider {
    int s = 2;
    int extra = 0;
    double p = 0.0;
};

// k pins followed by k fans (cliques of size fan_size, so each fan has
// chromatic number fan_size), wired pin_i complete to fan_i and nothing else
// between pins and fans. Decoy vertices get one random pin neighbour each and
// random edges elsewhere.
struct gen_planted_pinned {
    int k = 1;
    int fan_size = 2;
    int extra = 0;
    double p = 0.0;
};

enum class predicate_kind { spider_free, tau_below, triangle_free };

struct gen_predicate {
    predicate_kind kind;
    int a = 0; // spider_free: s; tau_below: d
    int b = 0; // tau_below: t
};

using gen_base = std::variant<gen_uniform, gen_incidence, gen_planted_core, gen_planted_spider, gen_planted_pinned>;

struct gen_spec {
    gen_base base;
    std::vector<gen_predicate> predicates;
    long budget = 10000; // rejection attempts
};

namespace detail {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

inline graph build_base(const gen_base& base, counter_rng rng, std::string name) {
    if (const auto* u = std::get_if<gen_uniform>(&base)) {
        graph g = make_empty_graph(u->n, std::move(name));
        for (int a = 0; a < u->n; ++a)
            for (int b = a + 1; b < u->n; ++b)
                if (rng.next_double() < u->p) add_edge(g, a, b);
        return g;
    }
    if (const auto* inc = std::get_if<gen_incidence>(&base)) {
        int q = inc->q;
        if (!is_prime(q)) throw input_error("incidence: q must be prime");
        graph g = make_empty_graph(2 * q * q, std::move(name));
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int x = 0; x < q; ++x) {
                    int y = (a * x + b) % q;
                    add_edge(g, x * q + y, q * q + a * q + b);
                }
        return g;
    }
    if (const auto* pc = std::get_if<gen_planted_core>(&base)) {
        int core_n = pc->w * pc->d;
        graph g = make_empty_graph(core_n + pc->extra, std::move(name));
        for (int i = 0; i < core_n; ++i)
            for (int j = i + 1; j < core_n; ++j) {
                bool same_part = (i / pc->w) == (j / pc->w);
                if (!same_part)
                    add_edge(g, i, j);
                else if (!pc->stable && rng.next_double() < pc->p)
                    add_edge(g, i, j);
            }
        for (int i = 0; i < g.n; ++i)
            for (int j = std::max(i + 1, core_n); j < g.n; ++j)
                if (rng.next_double() < pc->p) add_edge(g, i, j);
        std::ostringstream parts;
        for (int k = 0; k < pc->d; ++k) {
            if (k) parts << "|";
            for (int i = 0; i < pc->w; ++i) parts << (i ? "," : "") << (k * pc->w + i);
        }
        g.name += ":core=[" + parts.str() + "]";
        return g;
    }
    if (const auto* ps = std::get_if<gen_planted_spider>(&base)) {
        int s = ps->s;
        graph spider = build_spider(s);
        graph g = make_empty_graph(spider.n + ps->extra, std::move(name));
        for (auto [u, v] : spider.edges()) add_edge(g, u, v);
        for (int i = 0; i < g.n; ++i)
            for (int j = std::max(i + 1, spider.n); j < g.n; ++j)
                if (rng.next_double() < ps->p) add_edge(g, i, j);
        g.name += ":spider=[0.." + std::to_string(spider.n - 1) + "]";
        return g;
    }
    const auto& pp = std::get<gen_planted_pinned>(base);
    int fans_begin = pp.k;
    int fans_end = pp.k + pp.k * pp.fan_size;
    graph g = make_empty_graph(fans_end + pp.extra, std::move(name));
    for (int i = 0; i < pp.k; ++i) {
        int lo = fans_begin + i * pp.fan_size;
        for (int a = lo; a < lo + pp.fan_size; ++a) {
            add_edge(g, i, a);
            for (int b = a + 1; b < lo + pp.fan_size; ++b) add_edge(g, a, b);
        }
    }
    for (int x = fans_end; x < g.n; ++x) {
        add_edge(g, x, int(rng.below(pp.k)));
        for (int y = fans_begin; y < g.n; ++y)
            if (y != x && y >= fans_end && rng.next_double() < pp.p && x < y) add_edge(g, x, y);
        for (int y = fans_begin; y < fans_end; ++y)
            if (rng.next_double() < pp.p) add_edge(g, x, y);
    }
    g.name += ":pins=[0.." + std::to_string(pp.k - 1) + "]";
    return g;
}

inline bool satisfies(const graph& g, const gen_predicate& pred) {
    switch (pred.kind) {
    case predicate_kind::spider_free:
        return spider_free(g, pred.a);
    case predicate_kind::tau_below:
        return tau(g, pred.a).first < pred.b;
    case predicate_kind::triangle_free: {
        for (int u = 0; u < g.n; ++u)
            for (int v = g.adj[u].find_next(u); v >= 0; v = g.adj[u].find_next(v))
                if (g.adj[u].count_and(g.adj[v]) > 0) return false;
        return true;
    }
    }
    return false;
}

inline std::string spec_to_string(const gen_spec& spec);

} // namespace detail

// Deterministic for fixed (spec, seed). Rejection sampling re-draws the base
// until every predicate holds or the attempt budget is exhausted.
inline graph gen_graph(const gen_spec& spec, std::uint64_t seed) {
    counter_rng root(seed);
    std::string tag = detail::spec_to_string(spec) + "#seed=" + std::to_string(seed);
    for (long attempt = 0; attempt < spec.budget; ++attempt) {
        graph g = detail::build_base(spec.base, root.fork(std::uint64_t(attempt)), tag);
        bool ok = true;
        for (const auto& pred : spec.predicates)
            if (!detail::satisfies(g, pred)) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw generation_error("gen_graph: attempt budget exhausted", spec.budget);
}

// ---------------------------------------------------------------------------
// Text form, used by the CLI and carried in graph names.
// Grammar (';'-separated clauses after the base):
//   uniform:n=N,p=P | incidence:q=Q | core:w=W,d=D,extra=E,p=P,stable=0|1
//   | spider:s=S,extra=E,p=P | pinned:k=K,fan=F,extra=E,p=P
//   [;free=spiderS | tau<T:d=D | trianglefree]* [;budget=B]

namespace detail {

inline std::string spec_to_string(const gen_spec& spec) {
    std::ostringstream os;
    if (const auto* u = std::get_if<gen_uniform>(&spec.base))
        os << "uniform:n=" << u->n << ",p=" << u->p;
    else if (const auto* i = std::get_if<gen_incidence>(&spec.base))
        os << "incidence:q=" << i->q;
    else if (const auto* c = std::get_if<gen_planted_core>(&spec.base))
        os << "core:w=" << c->w << ",d=" << c->d << ",extra=" << c->extra << ",p=" << c->p
           << ",stable=" << (c->stable ? 1 : 0);
    else if (const auto* s = std::get_if<gen_planted_spider>(&spec.base))
        os << "spider:s=" << s->s << ",extra=" << s->extra << ",p=" << s->p;
    else if (const auto* pp = std::get_if<gen_planted_pinned>(&spec.base))
        os << "pinned:k=" << pp->k << ",fan=" << pp->fan_size << ",extra=" << pp->extra << ",p=" << pp->p;
    for (const auto& pred : spec.predicates) {
        if (pred.kind == predicate_kind::spider_free)
            os << ";free=spider" << pred.a;
        else if (pred.kind == predicate_kind::tau_below)
            os << ";tau<" << pred.b << ":d=" << pred.a;
        else
            os << ";trianglefree";
    }
    if (spec.budget != 10000) os << ";budget=" << spec.budget;
    return os.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    out.push_back(cur);
    return out;
}

inline double parse_field(const std::string& clause, const std::string& key, std::optional<double> dflt = {}) {
    for (const auto& kv : split(clause, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        if (kv.substr(0, eq) == key) return std::stod(kv.substr(eq + 1));
    }
    if (dflt) return *dflt;
    throw input_error("gen spec: missing field '" + key + "' in '" + clause + "'");
}

} // namespace detail

inline gen_spec parse_gen_spec(const std::string& text) {
    auto clauses = detail::split(text, ';');
    if (clauses.empty()) throw input_error("gen spec: empty");
    gen_spec spec;
    const std::string& b = clauses[0];
    auto colon = b.find(':');
    std::string args = colon == std::string::npos ? std::string() : b.substr(colon + 1);
    auto field = [&](const std::string& k) { return detail::parse_field(args, k); };
    auto field_or = [&](const std::string& k, double d) { return detail::parse_field(args, k, d); };
    if (b.rfind("uniform:", 0) == 0)
        spec.base = gen_uniform{int(field("n")), field("p")};
    else if (b.rfind("incidence:", 0) == 0)
        spec.base = gen_incidence{int(field("q"))};
    else if (b.rfind("core:", 0) == 0)
        spec.base = gen_planted_core{int(field("w")), int(field("d")), int(field_or("extra", 0)),
                                     field_or("p", 0.0), field_or("stable", 1) != 0};
    else if (b.rfind("spider:", 0) == 0)
        spec.base = gen_planted_spider{int(field("s")), int(field_or("extra", 0)), field_or("p", 0.0)};
    else if (b.rfind("pinned:", 0) == 0)
        spec.base = gen_planted_pinned{int(field("k")), int(field("fan")), int(field_or("extra", 0)),
                                       field_or("p", 0.0)};
    else
        throw input_error("gen spec: unknown base '" + b + "'");
    for (std::size_t i = 1; i < clauses.size(); ++i) {
        const std::string& c = clauses[i];
        if (c.rfind("free=spider", 0) == 0)
            spec.predicates.push_back({predicate_kind::spider_free, std::stoi(c.substr(11)), 0});
        else if (c.rfind("tau<", 0) == 0) {
            auto colon = c.find(':');
            if (colon == std::string::npos) throw input_error("gen spec: bad tau clause");
            int t = std::stoi(c.substr(4, colon - 4));
            int d = int(detail::parse_field(c.substr(colon + 1), "d"));
            spec.predicates.push_back({predicate_kind::tau_below, d, t});
        } else if (c == "trianglefree")
            spec.predicates.push_back({predicate_kind::triangle_free, 0, 0});
        else if (c.rfind("budget=", 0) == 0)
            spec.budget = std::stol(c.substr(7));
        else
            throw input_error("gen spec: unknown clause '" + c + "'");
    }
    return spec;
}

inline std::string gen_spec_to_string(const gen_spec& spec) { return detail::spec_to_string(spec); }

inline graph gen_graph(const std::string& spec_text, std::uint64_t seed) {
    return gen_graph(parse_gen_spec(spec_text), seed);
}

} // namespace chibound
