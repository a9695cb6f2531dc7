#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace newtonsys {

// mpq_class keeps values canonical after every arithmetic operation; the
// constructors below canonicalize explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

/// Always "p/q", including integers ("3/1"), matching the certificate format.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Shortest form: "3" or "3/4".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw InputError("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool is_perfect_square(const Integer& z) {
    return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& z) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational r(1);
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace newtonsys
