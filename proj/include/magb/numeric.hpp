#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <string>

#include "magb/errors.hpp"

namespace magb {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown by the checked int64 scalar; callers retry with Int.
struct int64_overflow {};

// int64 with trapped overflow. The exact linear-algebra kernel runs on this
// type first and falls back to GMP only when a computation actually needs it.
struct I64 {
    std::int64_t v = 0;
    I64() = default;
    I64(std::int64_t x) : v(x) {}
};

inline I64 operator+(I64 a, I64 b) {
    I64 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw int64_overflow{};
    return r;
}
inline I64 operator-(I64 a, I64 b) {
    I64 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw int64_overflow{};
    return r;
}
inline I64 operator*(I64 a, I64 b) {
    I64 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw int64_overflow{};
    return r;
}
inline I64 operator-(I64 a) {
    if (a.v == INT64_MIN) throw int64_overflow{};
    return I64{-a.v};
}
inline I64& operator+=(I64& a, I64 b) { return a = a + b; }
inline I64& operator-=(I64& a, I64 b) { return a = a - b; }
inline bool operator==(I64 a, I64 b) { return a.v == b.v; }
inline bool operator!=(I64 a, I64 b) { return a.v != b.v; }

inline bool is_zero(const I64& x) { return x.v == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }

inline int sign_of(const I64& x) { return x.v > 0 ? 1 : (x.v < 0 ? -1 : 0); }
inline int sign_of(const Int& x) { return sgn(x); }

// |a| < |b|
inline bool abs_less(const I64& a, const I64& b) {
    // compare via unsigned magnitudes; INT64_MIN safe
    std::uint64_t ua = a.v < 0 ? -(std::uint64_t)a.v : (std::uint64_t)a.v;
    std::uint64_t ub = b.v < 0 ? -(std::uint64_t)b.v : (std::uint64_t)b.v;
    return ua < ub;
}
inline bool abs_less(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

// quotient rounded to nearest (remainder magnitude <= |b|/2); b != 0
inline I64 div_round(const I64& a, const I64& b) {
    std::int64_t q = a.v / b.v;
    std::int64_t r = a.v % b.v;
    std::int64_t babs = b.v < 0 ? -b.v : b.v;  // b.v == INT64_MIN never a pivot after abs checks
    if (r != 0) {
        std::int64_t rabs = r < 0 ? -r : r;
        if (2 * rabs > babs) q += ((r < 0) == (b.v < 0)) ? 1 : -1;
    }
    return I64{q};
}
inline Int div_round(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // r in [0,|b|) for b>0, (b,0] for b<0; shift to nearest
    Int twice = 2 * r;
    if (sgn(b) > 0) {
        if (twice > b) q += 1;
    } else {
        if (twice < b) q += 1;
    }
    return q;
}

inline bool divides(const I64& d, const I64& a) { return d.v != 0 && a.v % d.v == 0; }
inline bool divides(const Int& d, const Int& a) {
    return sgn(d) != 0 && mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t());
}

inline I64 div_exact(const I64& a, const I64& b) { return I64{a.v / b.v}; }
inline Int div_exact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int to_int(const I64& x) { return Int((long)x.v); }
inline const Int& to_int(const Int& x) { return x; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// representative of x mod 1 in [0,1)
inline Rat mod1(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rat(fl);
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// "p/q" or "p"
Rat parse_rat(const std::string& s);
std::string rat_string(const Rat& r);

}  // namespace magb
