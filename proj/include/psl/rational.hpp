#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "psl/errors.hpp"

namespace psl {

using Int = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0, which is exactly the
// invariant the rest of the code relies on.
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q", "p", or a decimal-free signed integer string.
Rational parse_rational(const std::string& text);

// "p/q" (always includes the denominator, "3/1" style, so round-trips are
// unambiguous).
std::string rational_to_string(const Rational& r);

// Exact n-th power, n >= 0.
Rational rational_pow(const Rational& base, unsigned long n);

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rational_floor(const Rational& r) {
    return floor_div(r.get_num(), r.get_den());
}

// Nearest integer with ties going to the smaller integer.
Int round_to_nearest_tie_smaller(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<long> to_long(const Int& v);

} // namespace psl
