#pragma once

#include <gmpxx.h>

#include <string>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {

/// Exact rational numbers. mpq_class keeps the canonical form the rest of
/// the library relies on: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// x^e for integer e; e < 0 requires x != 0.
inline Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e < 0) throw DivisionByZero("rational_pow: 0 to a negative power");
        return Rational(0);
    }
    Rational base = x;
    long n = e;
    if (n < 0) {
        base = 1 / base;
        n = -n;
    }
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// Parses "p", "-p", "p/q". Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

/// "p" or "p/q", canonical form.
std::string to_string(const Rational& q);

}  // namespace hopfbundle
