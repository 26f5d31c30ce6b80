#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "chibound/bounds.hpp"

using namespace chibound;

TEST_CASE("base bound values") {
    // s=2, t=1: 14^840
    bigint b = base_bound(2, 1);
    REQUIRE(b == bpow(bigint(14), 840));
    // digit length cross-checked against the logarithm estimate
    std::size_t by_log = std::size_t(std::floor(840.0 * std::log10(14.0))) + 1;
    REQUIRE(digit_count(b) == by_log);
    REQUIRE(digit_count(b) == 963);
    REQUIRE(decimal(b).size() == 963);

    REQUIRE(base_bound(2, 2) > base_bound(2, 1));
    REQUIRE_THROWS_AS(base_bound(1, 1), input_error);
    REQUIRE_THROWS_AS(base_bound(2, 0), input_error);
}

TEST_CASE("digit_count exact at powers of ten") {
    REQUIRE(digit_count(bigint(0)) == 1);
    REQUIRE(digit_count(bigint(9)) == 1);
    REQUIRE(digit_count(bigint(10)) == 2);
    for (int e = 1; e < 40; ++e) {
        REQUIRE(digit_count(bpow(bigint(10), e)) == std::size_t(e) + 1);
        REQUIRE(digit_count(bpow(bigint(10), e) - 1) == std::size_t(e));
    }
}

TEST_CASE("hypothesis-A polynomial validity") {
    poly_bound f;
    f.coeffs = {bigint(0), bigint(1)};
    REQUIRE(f.hypothesis_a_valid()); // f(t) = t
    f.coeffs = {bigint(5)};
    REQUIRE(!f.hypothesis_a_valid()); // constant: f(t) >= t fails eventually
    f.coeffs = {bigint(0), bigint(0), bigint(3)};
    REQUIRE(f.hypothesis_a_valid());
    f.coeffs = {bigint(0), bigint(1), bigint(0)};
    REQUIRE(!f.hypothesis_a_valid()); // zero leading coefficient

    poly_bound base = hyp_base_poly(2);
    REQUIRE(base.hypothesis_a_valid());
    REQUIRE(base.degree() == 840);
    REQUIRE(base.eval(1) == bpow(bigint(14), 840) + 1);
    for (int t = 1; t <= 4; ++t) REQUIRE(base.eval(t) >= t);
}

TEST_CASE("colourdense bound examples") {
    poly_bound id;
    id.coeffs = {bigint(0), bigint(1)}; // f(t) = t
    id.meta = "t";
    hyp_fn f = make_hyp_fn(id);

    // s=2,d=2,w=1,t=1: 2*4*1*(1 + 2^64)
    auto r = colourdense_bound(2, 2, 1, 1, f);
    REQUIRE(r.q == 1 + pow2(bigint(64)));
    REQUIRE(r.bound == bigint(8) * (1 + pow2(bigint(64))));

    // q grows with t
    auto q1 = q_of_t(2, 2, 1, f);
    auto q2 = q_of_t(2, 2, 2, f);
    REQUIRE(q2 > q1);
    // s=2,d=2,t=2: q = 2 + 2^64 * 2^10
    REQUIRE(q2 == 2 + pow2(bigint(64)) * 1024);
}

TEST_CASE("lift_chain spot values and identities") {
    hyp_fn base = make_hyp_fn(hyp_base_poly(2));
    auto r = lift_chain(2, 2, 1, base);
    REQUIRE(r.chain.w == 18); // s^4 t^s + s = 16+2
    REQUIRE(r.chain.f5 == r.chain.f6);
    REQUIRE(r.chain.f6 == r.chain.f7);
    REQUIRE(r.chain.f3 == r.chain.f4);
    REQUIRE(r.chain.f1 > r.chain.f2);

    for (int s : {2, 3})
        for (int d : {2, 3})
            for (int t = 1; t <= 2; ++t) {
                auto rr = lift_chain(s, d, t, make_hyp_fn(hyp_base_poly(s)));
                REQUIRE(rr.chain.f5 == rr.chain.f7);
                REQUIRE(rr.chain.f3 == rr.chain.f4);
                REQUIRE(rr.chain.f1 >= rr.chain.f2);
            }
}

TEST_CASE("dual evaluator replay: expression route equals direct route") {
    hyp_fn base = make_hyp_fn(hyp_base_poly(2));
    for (int t = 1; t <= 3; ++t) {
        auto r = lift_chain(2, 2, t, base);
        for (auto& [name, val] : r.chain.named()) {
            auto it = r.exprs.find(name);
            REQUIRE(it != r.exprs.end());
            REQUIRE(eval_expr(it->second) == *val);
        }
    }
}

TEST_CASE("lifted function evaluates to the chain's f1") {
    hyp_fn base = make_hyp_fn(hyp_base_poly(2));
    auto r = lift_chain(2, 2, 2, base);
    // lifted(x) must be chain-f1 at t = x+1
    REQUIRE(r.lifted.valid());
    REQUIRE(r.lifted.eval(1) == r.chain.f1);
    auto r3 = lift_chain(2, 2, 3, base);
    REQUIRE(r.lifted.eval(2) == r3.chain.f1);
    // and f1(t) >= f(t) >= t under hypothesis-A inputs
    REQUIRE(r.chain.f1 >= base.eval(2));
    REQUIRE(base.eval(2) >= 2);
}

TEST_CASE("levels parameter formulas") {
    REQUIRE(levels_k(2, 2, 1, 1) == 4);        // (ac)^{d+1}, b=a
    REQUIRE(levels_p(2, 2, 1, 1, 2) == 1024);  // 2^4 * 2^6
    REQUIRE(levels_k(2, 1, 2, 1) == 9);        // b(ac)^d + (a(c-1))^{d+1} + 1 = 4+4+1
    REQUIRE(levels_p(2, 1, 2, 1, 1) == 512);   // 2^9
    REQUIRE(levels_k(3, 0, 2, 0) == 1);        // b<a, d=0
    REQUIRE_THROWS_AS(levels_k(2, 3, 1, 1), input_error);
    REQUIRE_THROWS_AS(levels_k(2, 1, 0, 1), input_error);
    REQUIRE_THROWS_AS(levels_k(1, 1, 1, 1), input_error);
}

TEST_CASE("claim-1 inequality grid subset") {
    // The claim is stated after the c=1 and b=0 cases are dispatched, so its
    // scope is b >= 1, c >= 2, d >= 1. At c=1 only the b<a points satisfy all
    // five (the b=a gap inequality needs c >= 2).
    for (int a = 2; a <= 3; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d)
                    for (int t = 1; t <= 3; ++t) {
                        if (c == 1 && b == a) continue;
                        auto rep = levels_claim1(a, b, c, d, t);
                        INFO("a=" << a << " b=" << b << " c=" << c << " d=" << d << " t=" << t);
                        REQUIRE(rep.all());
                    }
    // Outside the claim's scope the gap inequality genuinely fails.
    REQUIRE(!levels_claim1(2, 2, 1, 1, 1).k_gap);
}

TEST_CASE("threshold helpers") {
    REQUIRE(attach_nbr_threshold(2, 1) == 2);
    REQUIRE(heavy_nbr_threshold(2, 1) == 8);
    REQUIRE(nonnbr_quota(11, 1) == 11);
    REQUIRE(nonnbr_quota(3, 5) == 0); // floor(w/t) with t > w
    REQUIRE(core_contact_threshold(2, 1, 2) == 4);
    REQUIRE(six_nice_threshold(2, 1, 2) == 36);
    REQUIRE(eight_nice_degree(2, 1, 2) == 3 * 64);
    REQUIRE(stage8_class_ceiling(2, 1, 2, 1) == 120 * 2 * 2 * 1024);
    REQUIRE(upgrade2_w_floor(2, 1) == 11);
    REQUIRE(upgrade4_w_floor(2, 1) == 22);
    REQUIRE(pipeline_w(2, 1) == 18);
}
