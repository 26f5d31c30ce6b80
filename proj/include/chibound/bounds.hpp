#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chibound/bigint.hpp"

namespace chibound {

// ---------------------------------------------------------------------------
// Thresholds used by the template layer. Computed here and only here.

inline bigint attach_nbr_threshold(int s, int t) { return bigint(s) * bpow(t, s - 1); }       // s*t^(s-1)
inline bigint dense_attach_threshold(int s, int t) { return bpow(t, s - 1); }                 // t^(s-1)
inline bigint nonnbr_quota(int w, int t) { return bigint(w / t); }                            // floor(w/t)
inline bigint heavy_nbr_threshold(int s, int t) { return bigint(s) * s * s * bpow(t, s - 1); } // s^3*t^(s-1)
inline bigint core_contact_threshold(int d, int t, int s) { return bpow(bigint(d) * t, s); }  // (dt)^s
inline bigint six_nice_threshold(int d, int t, int s) {
    return 2 * bpow(bigint(d) * t, 2 * s) + bpow(bigint(d) * t, s); // 2(dt)^{2s} + (dt)^s
}
inline bigint seven_nice_threshold(int d, int w, int s, int t) {
    return bigint(60) * d * w * s * bpow(bigint(d) * t, 5 * s); // 60dws(dt)^{5s}
}
inline bigint eight_nice_degree(int d, int t, int s) { return 3 * bpow(bigint(d) * t, 3 * s); } // 3(dt)^{3s}

inline bigint stage1_class_ceiling(int t) { return bigint(2) * t; }
inline bigint stage3_class_ceiling(int s, int d, int w) { return bigint(2) * s * d * w; }
inline bigint stage5_class_ceiling(int d, int w, int t, int s) {
    return bigint(2) * d * w * bpow(bigint(d) * t, s);
}
inline bigint stage8_class_ceiling(int d, int w, int s, int t) {
    return bigint(120) * d * w * s * bpow(bigint(d) * t, 5 * s);
}

// Parameter floors for the witness-upgrade lemmas.
inline bigint upgrade2_w_floor(int s, int t) { return bigint(s + 1) * t + bigint(s) * s * s * bpow(t, s); }
inline bigint upgrade4_w_floor(int s, int t) {
    return bigint(s - 1) * s * s * bpow(t, s - 1) + bpow(s, 4) * bpow(t, s - 1) + s;
}

// w(t) = s^4 t^s + s, the core width the end-to-end pipeline uses.
inline bigint pipeline_w(int s, const bigint& t) {
    bigint ts;
    mpz_pow_ui(ts.backend().data(), t.backend().data(), unsigned(s));
    return bpow(s, 4) * ts + s;
}

// ---------------------------------------------------------------------------
// (s(s^2+s+1)t)^{120(s^2+s+1)}

inline bigint base_bound(int s, const bigint& t) {
    if (s < 2 || t < 1) throw input_error("base_bound: need s >= 2, t >= 1");
    bigint base = bigint(s) * (bigint(s) * s + s + 1) * t;
    return bpow(base, std::uint64_t(120) * (s * s + s + 1));
}

// ---------------------------------------------------------------------------
// Expression trees: a second, independently interpreted route to every chain
// value, used by the replay acceptance check.

struct bound_expr;
using bound_expr_ptr = std::shared_ptr<const bound_expr>;

struct bound_expr {
    enum class kind { constant, sum, product, power };
    kind k = kind::constant;
    bigint value;
    std::vector<bound_expr_ptr> kids;
    std::uint64_t exponent = 0;
};

inline bound_expr_ptr be_const(bigint v) {
    auto e = std::make_shared<bound_expr>();
    e->k = bound_expr::kind::constant;
    e->value = std::move(v);
    return e;
}
inline bound_expr_ptr be_sum(std::vector<bound_expr_ptr> kids) {
    auto e = std::make_shared<bound_expr>();
    e->k = bound_expr::kind::sum;
    e->kids = std::move(kids);
    return e;
}
inline bound_expr_ptr be_prod(std::vector<bound_expr_ptr> kids) {
    auto e = std::make_shared<bound_expr>();
    e->k = bound_expr::kind::product;
    e->kids = std::move(kids);
    return e;
}
inline bound_expr_ptr be_pow(bound_expr_ptr base, std::uint64_t exp) {
    auto e = std::make_shared<bound_expr>();
    e->k = bound_expr::kind::power;
    e->kids = {std::move(base)};
    e->exponent = exp;
    return e;
}

inline bigint eval_expr(const bound_expr_ptr& e) {
    switch (e->k) {
    case bound_expr::kind::constant:
        return e->value;
    case bound_expr::kind::sum: {
        bigint acc = 0;
        for (const auto& kid : e->kids) acc += eval_expr(kid);
        return acc;
    }
    case bound_expr::kind::product: {
        bigint acc = 1;
        for (const auto& kid : e->kids) acc *= eval_expr(kid);
        return acc;
    }
    case bound_expr::kind::power:
        return bpow(eval_expr(e->kids[0]), e->exponent);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// PolyBound: non-negative integer coefficients, ascending degree. Non-negative
// coefficients make it increasing on non-negative arguments, and any positive
// coefficient in degree >= 1 gives f(t) >= t for t >= 1.

struct poly_bound {
    std::vector<bigint> coeffs; // ascending degree
    std::string meta;

    bigint eval(const bigint& x) const {
        bigint acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }

    int degree() const { return coeffs.empty() ? -1 : int(coeffs.size()) - 1; }

    bool hypothesis_a_valid() const {
        if (coeffs.empty() || coeffs.back() == 0) return false;
        bool has_linear_or_higher = false;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] < 0) return false;
            if (i >= 1 && coeffs[i] >= 1) has_linear_or_higher = true;
        }
        return has_linear_or_higher;
    }

    bound_expr_ptr expr_at(const bound_expr_ptr& x) const {
        bound_expr_ptr acc = be_const(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = be_sum({be_prod({acc, x}), be_const(coeffs[i])});
        return acc;
    }
};

// The bottom-of-induction Hypothesis-A polynomial: the single base-bound term
// plus t, so f(t) >= t holds with no case analysis.
inline poly_bound hyp_base_poly(int s) {
    if (s < 2) throw input_error("hyp_base_poly: need s >= 2");
    poly_bound f;
    std::uint64_t deg = std::uint64_t(120) * (s * s + s + 1);
    f.coeffs.assign(std::size_t(deg) + 1, bigint(0));
    f.coeffs[1] = 1;
    f.coeffs[std::size_t(deg)] = bpow(bigint(s) * (bigint(s) * s + s + 1), deg);
    f.meta = "base-bound-term+t (s=" + std::to_string(s) + ")";
    return f;
}

// ---------------------------------------------------------------------------
// A Hypothesis-A function: either an explicit polynomial, or the lifted bound
// of a lower induction level kept in composed form. Expanding the lifted
// polynomial's coefficients is infeasible (10^5..10^6-digit coefficients), so
// the composed form evaluates through the chain instead; composition
// correctness is tested by comparing eval against the chain's f1.

struct hyp_fn;
struct lifted_form;

struct hyp_fn {
    std::shared_ptr<const poly_bound> poly;
    std::shared_ptr<const lifted_form> lifted;
    std::string meta;

    bigint eval(const bigint& x) const;
    bound_expr_ptr expr_at(const bound_expr_ptr& x) const;
    bool valid() const;
};

inline hyp_fn make_hyp_fn(poly_bound p) {
    hyp_fn f;
    f.meta = p.meta;
    f.poly = std::make_shared<const poly_bound>(std::move(p));
    return f;
}

// BoundChain: every explicit value of the Thm-5.1 display, exact.
struct bound_chain {
    int s = 0, d = 0;
    bigint t, w, q, f8, f7, f6, f5, f4, f3, f2, f1;
    bigint base_arg; // (s(s^2+s+1)t)^{120(s^2+s+1)} * w, the argument fed to f

    std::vector<std::pair<std::string, const bigint*>> named() const {
        return {{"t", &t},   {"w", &w},   {"q", &q},   {"f8", &f8}, {"f7", &f7}, {"f6", &f6},
                {"f5", &f5}, {"f4", &f4}, {"f3", &f3}, {"f2", &f2}, {"f1", &f1}};
    }
};

// f(x) = chain-f1 evaluated at t = x + 1 with the lower level's f.
struct lifted_form {
    int s = 0;
    int d = 0;
    hyp_fn lower;
};

struct lift_result {
    bound_chain chain;
    hyp_fn lifted;                                // Hypothesis-A function for level d+1
    std::map<std::string, bound_expr_ptr> exprs;  // replay route, keyed like chain.named()
};

lift_result lift_chain(int s, int d, const bigint& t, const hyp_fn& f);

inline bigint hyp_fn::eval(const bigint& x) const {
    if (poly) return poly->eval(x);
    return lift_chain(lifted->s, lifted->d, x + 1, lifted->lower).chain.f1;
}

inline bound_expr_ptr hyp_fn::expr_at(const bound_expr_ptr& x) const {
    if (poly) return poly->expr_at(x);
    auto shifted = be_sum({x, be_const(1)});
    // Rebuild the chain expression with the shifted argument as t.
    bigint tv = eval_expr(shifted);
    auto res = lift_chain(lifted->s, lifted->d, tv, lifted->lower);
    return res.exprs.at("f1");
}

inline bool hyp_fn::valid() const {
    if (poly) return poly->hypothesis_a_valid();
    return lifted && lifted->lower.valid();
}

// q(t) = f(t) + 2^{s^{2d+2}} t^{ds+s^2+s}
inline bigint q_of_t(int s, int d, const bigint& t, const hyp_fn& f) {
    bigint tp;
    mpz_pow_ui(tp.backend().data(), t.backend().data(), unsigned(d * s + s * s + s));
    return f.eval(t) + pow2(bpow(s, std::uint64_t(2) * d + 2)) * tp;
}

// Thm-3.5 value: s d^2 w^{2s} (f(t) + 2^{s^{2d+2}} t^{ds+s^2+s}).
struct colourdense_result {
    bigint bound;
    bigint q;
};

inline colourdense_result colourdense_bound(int s, int d, const bigint& w, const bigint& t, const hyp_fn& f) {
    if (s < 2 || d < 1 || w < 1 || t < 1) throw input_error("colourdense_bound: bad parameter domain");
    if (!f.valid()) throw input_error("colourdense_bound: f is not Hypothesis-A valid");
    colourdense_result r;
    r.q = q_of_t(s, d, t, f);
    bigint wp;
    mpz_pow_ui(wp.backend().data(), w.backend().data(), unsigned(2 * s));
    r.bound = bigint(s) * d * d * wp * r.q;
    return r;
}

inline lift_result lift_chain(int s, int d, const bigint& t, const hyp_fn& f) {
    if (s < 2 || d < 2 || t < 1) throw input_error("lift_chain: need s,d >= 2 and t >= 1");
    if (!f.valid()) throw input_error("lift_chain: f is not Hypothesis-A valid");
    lift_result out;
    bound_chain& ch = out.chain;
    ch.s = s;
    ch.d = d;
    ch.t = t;

    auto tpow = [&](std::uint64_t e) {
        bigint r;
        mpz_pow_ui(r.backend().data(), t.backend().data(), static_cast<unsigned long>(e));
        return r;
    };

    ch.w = bpow(s, 4) * tpow(std::uint64_t(s)) + s;
    bigint wbig = ch.w;
    bigint E = pow2(bpow(s, std::uint64_t(2) * d + 2));
    ch.q = f.eval(t) + E * tpow(std::uint64_t(d) * s + std::uint64_t(s) * s + s);

    bigint w_2s1;
    mpz_pow_ui(w_2s1.backend().data(), wbig.backend().data(), unsigned(2 * s - 1));
    ch.f8 = bigint(3) * s * bpow(d, std::uint64_t(3) * s + 2) * w_2s1 * tpow(std::uint64_t(3) * s) * ch.q;
    ch.f7 = bigint(120) * s * bpow(d, std::uint64_t(5) * s + 1) * wbig * tpow(std::uint64_t(5) * s) * ch.f8;
    ch.f6 = ch.f7;
    ch.f5 = ch.f7;
    ch.f4 = bigint(2) * bpow(d, std::uint64_t(s) + 1) * wbig * tpow(std::uint64_t(s)) * ch.f5;
    ch.f3 = ch.f4;
    ch.f2 = bigint(2) * s * d * wbig * ch.f3;
    bigint kt = bigint(s) * (bigint(s) * s + s + 1) * t;
    ch.base_arg = bpow(kt, std::uint64_t(120) * (s * s + s + 1)) * wbig;
    ch.f1 = f.eval(ch.base_arg) + 2 * t * ch.f2;

    // Replay route: the same quantities as explicit expression trees,
    // evaluated by the generic interpreter rather than the code above.
    auto te = be_const(t);
    auto we = be_sum({be_prod({be_const(bpow(s, 4)), be_pow(te, std::uint64_t(s))}), be_const(s)});
    auto qe = be_sum({f.expr_at(te),
                      be_prod({be_const(E), be_pow(te, std::uint64_t(d) * s + std::uint64_t(s) * s + s)})});
    auto f8e = be_prod({be_const(bigint(3) * s), be_const(bpow(d, std::uint64_t(3) * s + 2)),
                        be_pow(we, unsigned(2 * s - 1)), be_pow(te, std::uint64_t(3) * s), qe});
    auto f7e = be_prod({be_const(bigint(120) * s), be_const(bpow(d, std::uint64_t(5) * s + 1)), we,
                        be_pow(te, std::uint64_t(5) * s), f8e});
    auto f4e = be_prod({be_const(2), be_const(bpow(d, std::uint64_t(s) + 1)), we, be_pow(te, std::uint64_t(s)), f7e});
    auto f2e = be_prod({be_const(bigint(2) * s * d), we, f4e});
    auto base_arg_e = be_prod({be_pow(be_const(kt), std::uint64_t(120) * (s * s + s + 1)), we});
    auto f1e = be_sum({f.expr_at(be_const(eval_expr(base_arg_e))), be_prod({be_const(2), te, f2e})});
    out.exprs = {{"t", te},   {"w", we},   {"q", qe},   {"f8", f8e}, {"f7", f7e}, {"f6", f7e},
                 {"f5", f7e}, {"f4", f4e}, {"f3", f4e}, {"f2", f2e}, {"f1", f1e}};

    auto lf = std::make_shared<lifted_form>();
    lf->s = s;
    lf->d = d;
    lf->lower = f;
    out.lifted.lifted = lf;
    out.lifted.meta = "lifted(s=" + std::to_string(s) + ",d=" + std::to_string(d) + ") of [" + f.meta + "]";
    return out;
}

// ---------------------------------------------------------------------------
// Thm-2.3 parameters. k_{b,c,d} by the three-case display; p = 2^k t^{a(c+d)+b}.

inline bigint levels_k(int a, int b, int c, int d) {
    if (a < 2 || b < 0 || b > a || c < 1 || d < 0) throw input_error("levels_k: bad parameter domain");
    if (b == a) return bpow(bigint(a) * c, std::uint64_t(d) + 1);
    if (d > 0) return bigint(b) * bpow(bigint(a) * c, std::uint64_t(d)) + bpow(bigint(a) * (c - 1), std::uint64_t(d) + 1) + 1;
    return 1;
}

inline bigint levels_p(int a, int b, int c, int d, int t) {
    if (t < 1) throw input_error("levels_p: need t >= 1");
    bigint k = levels_k(a, b, c, d);
    return pow2(k) * bpow(t, std::uint64_t(a) * (c + d) + std::uint64_t(b));
}

// The five claim-(1) inequalities from the Thm-2.3 proof, exact.
struct claim1_report {
    bool k_gap = false;       // k_{b,c,d} - k_{b-1,c,d} >= k_{a,c,d-1}
    bool p_quadratic = false; // p >= 2(d+1)^2 t^2
    bool p_step_b = false;    // p >= 2(d+1) t p_{b-1,c,d}
    bool p_two_k = false;     // p >= 2^{k_{b,c,d}} t
    bool p_split = false;     // p >= t p_{b-1,c,d} + p_{a,c,d-1}
    bool all() const { return k_gap && p_quadratic && p_step_b && p_two_k && p_split; }
};

inline claim1_report levels_claim1(int a, int b, int c, int d, int t) {
    if (b < 1 || d < 1) throw input_error("levels_claim1: claim needs b >= 1 and d >= 1");
    claim1_report r;
    bigint k = levels_k(a, b, c, d);
    bigint p = levels_p(a, b, c, d, t);
    r.k_gap = k - levels_k(a, b - 1, c, d) >= levels_k(a, a, c, d - 1);
    r.p_quadratic = p >= bigint(2) * (d + 1) * (d + 1) * t * t;
    r.p_step_b = p >= bigint(2) * (d + 1) * t * levels_p(a, b - 1, c, d, t);
    r.p_two_k = p >= pow2(k) * t;
    r.p_split = p >= bigint(t) * levels_p(a, b - 1, c, d, t) + levels_p(a, a, c, d - 1, t);
    return r;
}

} // namespace chibound
