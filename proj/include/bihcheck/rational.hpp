#pragma once

// Arbitrary-precision integers and rationals.
//
// Thin layer over GMP's C++ classes. mpq_class keeps its value canonical
// (gcd(num, den) = 1, den > 0) as long as every constructor path calls
// canonicalize(), which make_rat() below does.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bih {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt &num, const BigInt &den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(long num, long den = 1) {
    return make_rat(BigInt(num), BigInt(den));
}

/// Parses "123", "-7", "45927/16". Throws std::invalid_argument.
inline BigRat parse_rat(std::string_view text) {
    std::string s(text);
    BigRat q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational literal: " + s);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigRat &q) { return q.get_str(10); }
inline std::string to_string(const BigInt &z) { return z.get_str(10); }

inline bool is_integer(const BigRat &q) { return q.get_den() == 1; }

inline BigInt gcd(const BigInt &a, const BigInt &b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm(const BigInt &a, const BigInt &b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline BigRat pow(const BigRat &base, unsigned long e) {
    BigRat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

inline BigInt pow(const BigInt &base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

/// Exact integer quotient; the caller guarantees divisibility.
inline BigInt divexact(const BigInt &a, const BigInt &b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace bih
