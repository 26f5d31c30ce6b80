#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

#include "chibound/errors.hpp"

namespace chibound {

// All bound arithmetic is exact. No floating point touches any bound value;
// log-based estimates appear only in tests as sanity cross-checks.
using bigint = boost::multiprecision::mpz_int;

inline bigint bpow(const bigint& base, std::uint64_t exp) {
    bigint r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), static_cast<unsigned long>(exp));
    return r;
}

inline bigint bpow(std::int64_t base, std::uint64_t exp) {
    return bpow(bigint(base), exp);
}

// 2^exp for exponents that may themselves be large values (e.g. k_{b,c,d}).
inline bigint pow2(const bigint& exp) {
    if (exp < 0) throw input_error("pow2: negative exponent");
    if (exp > bigint(std::uint64_t(1) << 32)) throw input_error("pow2: exponent too large to materialize");
    bigint r;
    mpz_ui_pow_ui(r.backend().data(), 2, exp.convert_to<unsigned long>());
    return r;
}

// Exact number of decimal digits (1 for zero).
inline std::size_t digit_count(const bigint& v) {
    if (v == 0) return 1;
    bigint a = abs(v);
    // mpz_sizeinbase is exact or one too large; settle with one comparison.
    std::size_t est = mpz_sizeinbase(a.backend().data(), 10);
    if (est == 1) return 1;
    return a < bpow(bigint(10), est - 1) ? est - 1 : est;
}

inline std::string decimal(const bigint& v) { return v.str(); }

} // namespace chibound
