#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psl/int_polynomial.hpp"
#include "psl/interval.hpp"
#include "psl/real_interval.hpp"

namespace psl {

// An exact algebraic number: primitive irreducible minimal polynomial plus a
// box isolating exactly one of its roots. Immutable; boxes with im = [0,0]
// are exactly the real numbers, complex boxes have sign-definite imaginary
// part. Safe to copy across threads.
class AlgebraicNumber {
public:
    AlgebraicNumber();  // zero

    static AlgebraicNumber from_rational(const Rational& r);
    static AlgebraicNumber from_int(long v) { return from_rational(Rational(v)); }
    // Validates: minpoly irreducible (after content normalization) and the
    // box isolates exactly one of its roots. The stored box is the canonical
    // refined one. Degree > 1 requires a genuine box.
    static AlgebraicNumber from_minpoly_box(const IntPoly& minpoly, const ComplexBox& box);
    // k-th root of an irreducible polynomial in canonical order.
    static AlgebraicNumber root_of(const IntPoly& irreducible, size_t index);

    const IntPoly& minpoly() const { return minpoly_; }
    const ComplexBox& box() const { return box_; }
    int degree() const { return minpoly_.degree(); }
    bool is_zero() const;
    bool is_rational() const { return degree() == 1; }
    bool is_real() const { return box_.is_real_line(); }
    std::optional<Rational> rational_value() const;

    std::string to_string() const;  // decimal approximation, for messages

private:
    AlgebraicNumber(IntPoly minpoly, ComplexBox box);
    IntPoly minpoly_;
    ComplexBox box_;

    friend AlgebraicNumber alg_make_unchecked(IntPoly, ComplexBox);
};

enum class ArithKind { add, sub, mul, div };
enum class ModulusCompare { less, equal, greater };

// Exact decision procedures ---------------------------------------------------

bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b);

// All roots of a's minimal polynomial, canonical order; contains a.
std::vector<AlgebraicNumber> conjugates_of(const AlgebraicNumber& a);

AlgebraicNumber complex_conjugate_of(const AlgebraicNumber& a);

bool is_algebraic_integer(const AlgebraicNumber& a);

std::optional<Rational> rational_value(const AlgebraicNumber& a);

// Exact order when a is a root of unity (minpoly is cyclotomic), else none.
std::optional<unsigned long> root_of_unity_order(const AlgebraicNumber& a);

ModulusCompare compare_modulus_to_one(const AlgebraicNumber& a);

// Trichotomy for real algebraic numbers: -1, 0, +1 as a <, =, > b.
int compare_real(const AlgebraicNumber& a, const AlgebraicNumber& b);
int sign_of(const AlgebraicNumber& a);  // a must be real

// Exact modulus comparison |a| vs |b| for arbitrary algebraic numbers.
int compare_modulus(const AlgebraicNumber& a, const AlgebraicNumber& b);

// Arithmetic -----------------------------------------------------------------

AlgebraicNumber alg_arith(const AlgebraicNumber& a, const AlgebraicNumber& b, ArithKind k);
AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_sub(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_div(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_neg(const AlgebraicNumber& a);
AlgebraicNumber alg_reciprocal(const AlgebraicNumber& a);
AlgebraicNumber alg_shift(const AlgebraicNumber& a, const Rational& s);  // a + s
AlgebraicNumber alg_scale(const AlgebraicNumber& a, const Rational& s);  // a * s
AlgebraicNumber alg_pow(const AlgebraicNumber& a, unsigned long n);
// Square root of a nonnegative real algebraic number.
AlgebraicNumber alg_sqrt_nonneg(const AlgebraicNumber& a);
// |a|, exact: a itself (or -a) when real, sqrt(a * conj(a)) otherwise.
AlgebraicNumber alg_abs(const AlgebraicNumber& a);

// Numeric enclosures ----------------------------------------------------------

// Box refined until max side <= 2^-bits.
ComplexBox refined_box_bits(const AlgebraicNumber& a, unsigned bits);
ComplexInterval enclosure(const AlgebraicNumber& a, mpfr_prec_t prec);
// Enclosure of |a| at the given precision.
RealInterval abs_enclosure(const AlgebraicNumber& a, mpfr_prec_t prec);

} // namespace psl
