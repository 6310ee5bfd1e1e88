#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "psl/rational.hpp"

namespace psl {

// Dense univariate polynomial over Z, coefficients low-to-high, no trailing
// zero coefficients. The zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& c);
    static IntPoly x();
    // x^n
    static IntPoly monomial(unsigned n, const Int& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& leading() const;
    const Int& operator[](size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const Int& c) const;

    Int content() const;                 // gcd of coefficients, >= 0
    IntPoly primitive_part() const;      // content 1, leading > 0
    bool is_primitive() const;

    IntPoly derivative() const;
    IntPoly reversed() const;            // x^deg * p(1/x)
    IntPoly negated_argument() const;    // p(-x)
    IntPoly squared_argument() const;    // p(x^2)

    Int eval(const Int& x) const;
    Rational eval(const Rational& x) const;
    // Sign of p at a rational point, computed exactly.
    int sign_at(const Rational& x) const;

    // Exact division; throws InternalError if the remainder is nonzero.
    IntPoly divide_exact(const IntPoly& divisor) const;
    // True (and sets quotient) iff divisor divides *this over Q; both are
    // taken primitive. Gauss's lemma makes the Z test sufficient.
    bool try_divide(const IntPoly& divisor, IntPoly* quotient = nullptr) const;

    std::string to_string() const;       // human-readable, for logs/tests

private:
    std::vector<Int> coeffs_;
    void trim();
};

IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Largest squarefree divisor, primitive.
IntPoly squarefree_part(const IntPoly& p);
// Yun decomposition: list of (primitive squarefree factor, multiplicity),
// pairwise coprime, product^mult = p up to a rational unit.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

bool is_squarefree(const IntPoly& p);

// n-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned n);
unsigned long euler_phi(unsigned long n);

// Polynomials over Q; used for Sturm chains and linear substitutions.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    explicit QPoly(const IntPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    const Rational& operator[](size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const Rational& c) const;

    Rational eval(const Rational& x) const;
    // Compose with u*x + v.
    QPoly compose_linear(const Rational& u, const Rational& v) const;

    // Euclidean division over Q.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

    IntPoly primitive() const;           // clear denominators, normalize

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// Minimal polynomial transforms that avoid resultants: q(x) vanishing at
// (a + s) resp. (s * a) when p vanishes at a, s rational.
IntPoly minpoly_shift(const IntPoly& p, const Rational& s);
IntPoly minpoly_scale(const IntPoly& p, const Rational& s);

// Sturm chain of a squarefree polynomial; counts real roots in (a, b].
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    int variations_at(const Rational& x) const;
    int count_roots(const Rational& a, const Rational& b) const;
    // +1 past every real root.
    Rational cauchy_root_bound() const;

private:
    std::vector<QPoly> chain_;
    IntPoly poly_;
};

// Determinant by fraction-free Gaussian elimination (Bareiss); entries in
// Z[x]. Used for Sylvester-matrix resultants of bivariate polynomials.
IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> m);

// Resultant_y(A(y), C(x, y)) where C is given as a polynomial in y with
// IntPoly (in x) coefficients, low-to-high in y.
IntPoly resultant_y(const IntPoly& a, const std::vector<IntPoly>& c);

} // namespace psl
