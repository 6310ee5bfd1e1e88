#include "psl/algebraic.hpp"

#include <algorithm>
#include <functional>

#include "psl/errors.hpp"
#include "psl/poly_factor.hpp"
#include "psl/root_isolation.hpp"

namespace psl {
namespace {

Rational two_pow_neg(unsigned bits) {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, bits);
    return Rational(1, d);
}

// Lower bound on the distance between distinct roots of a squarefree integer
// polynomial (Mahler-style, using |disc| >= 1).
Rational root_separation_lower_bound(const IntPoly& p) {
    const int d = p.degree();
    if (d <= 1) return Rational(1);
    Int norm(1);
    for (const auto& c : p.coeffs()) norm += abs(c);
    Int npow;
    mpz_pow_ui(npow.get_mpz_t(), norm.get_mpz_t(), static_cast<unsigned long>(d - 1));
    Int dpow;
    mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>((d + 3) / 2));
    return Rational(1, npow * dpow);
}

}  // namespace

AlgebraicNumber::AlgebraicNumber()
    : minpoly_(IntPoly::x()), box_(ComplexBox::real_point(Rational(0))) {}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, ComplexBox box)
    : minpoly_(std::move(minpoly)), box_(std::move(box)) {}

AlgebraicNumber alg_make_unchecked(IntPoly p, ComplexBox b) {
    return AlgebraicNumber(std::move(p), std::move(b));
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    IntPoly p({0, 1});
    if (r != 0) {
        std::vector<Int> c{-r.get_num(), r.get_den()};
        p = IntPoly(std::move(c));
    }
    return AlgebraicNumber(p.primitive_part(), ComplexBox::real_point(r));
}

AlgebraicNumber AlgebraicNumber::root_of(const IntPoly& irreducible, size_t index) {
    IntPoly p = irreducible.primitive_part();
    auto boxes = isolate_roots(p);
    if (index >= boxes.size()) throw InvalidInput("root index out of range");
    if (p.degree() == 1) return from_rational(Rational(-p[0], p[1]));
    if (!is_irreducible(p)) throw InvalidInput("polynomial is not irreducible");
    return AlgebraicNumber(p, boxes[index]);
}

AlgebraicNumber AlgebraicNumber::from_minpoly_box(const IntPoly& minpoly,
                                                  const ComplexBox& box) {
    IntPoly p = minpoly.primitive_part();
    if (p.degree() < 1) throw InvalidInput("minimal polynomial must have degree >= 1");
    if (p.degree() == 1) {
        Rational r(-p[0], p[1]);
        r.canonicalize();
        if (!box.re.contains(r) || !box.im.contains_zero())
            throw InvalidInput("box does not contain the rational root");
        return from_rational(r);
    }
    if (!is_irreducible(p)) throw InvalidInput("minimal polynomial is not irreducible");
    auto canonical = isolate_roots(p);
    // Refine canonical boxes until each is inside or outside the given box;
    // exactly one may remain inside.
    Rational width = two_pow_neg(64);
    for (int round = 0; round < 8; ++round) {
        std::vector<size_t> inside;
        bool unresolved = false;
        for (size_t i = 0; i < canonical.size(); ++i) {
            if (box.contains_box(canonical[i]))
                inside.push_back(i);
            else if (box.intersects(canonical[i]))
                unresolved = true;
        }
        if (!unresolved) {
            if (inside.size() == 1)
                return AlgebraicNumber(p, canonical[inside[0]]);
            throw InvalidInput("box isolates " + std::to_string(inside.size()) +
                               " roots; need exactly one");
        }
        width /= 256;
        for (auto& c : canonical) c = refine_box(p, c, width);
    }
    throw InvalidInput("box boundary too close to a root; cannot certify isolation");
}

bool AlgebraicNumber::is_zero() const {
    return minpoly_.degree() == 1 && minpoly_[0] == 0;
}

std::optional<Rational> AlgebraicNumber::rational_value() const {
    if (degree() != 1) return std::nullopt;
    Rational r(-minpoly_[0], minpoly_[1]);
    r.canonicalize();
    return r;
}

std::string AlgebraicNumber::to_string() const {
    auto enc = enclosure(*this, 96);
    std::string s = format_decimal(enc.re().midpoint(), 12);
    if (!is_real()) {
        s += " + ";
        s += format_decimal(enc.im().midpoint(), 12);
        s += "i";
    }
    return s;
}

std::optional<Rational> rational_value(const AlgebraicNumber& a) {
    return a.rational_value();
}

bool is_algebraic_integer(const AlgebraicNumber& a) {
    return a.minpoly().leading() == 1;
}

ComplexBox refined_box_bits(const AlgebraicNumber& a, unsigned bits) {
    return refine_box(a.minpoly(), a.box(), two_pow_neg(bits));
}

ComplexInterval enclosure(const AlgebraicNumber& a, mpfr_prec_t prec) {
    ComplexBox b = refined_box_bits(a, static_cast<unsigned>(prec) + 8);
    return ComplexInterval::from_box(b, prec);
}

RealInterval abs_enclosure(const AlgebraicNumber& a, mpfr_prec_t prec) {
    return enclosure(a, prec + 8).abs();
}

bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!(a.minpoly() == b.minpoly())) return false;
    if (a.degree() == 1) return true;
    if (!a.box().intersects(b.box())) return false;
    Rational sep = root_separation_lower_bound(a.minpoly());
    Rational target = sep / 4;
    ComplexBox ba = refine_box(a.minpoly(), a.box(), target);
    ComplexBox bb = refine_box(b.minpoly(), b.box(), target);
    return ba.intersects(bb);
}

std::vector<AlgebraicNumber> conjugates_of(const AlgebraicNumber& a) {
    if (a.degree() == 1) return {a};
    std::vector<AlgebraicNumber> out;
    for (const auto& box : isolate_roots(a.minpoly()))
        out.push_back(alg_make_unchecked(a.minpoly(), box));
    return out;
}

AlgebraicNumber complex_conjugate_of(const AlgebraicNumber& a) {
    if (a.is_real()) return a;
    return alg_make_unchecked(a.minpoly(), a.box().conjugate());
}

std::optional<unsigned long> root_of_unity_order(const AlgebraicNumber& a) {
    if (a.is_zero()) throw InvalidInput("zero is not a root of unity candidate");
    if (auto r = a.rational_value()) {
        if (*r == 1) return 1;
        if (*r == -1) return 2;
        return std::nullopt;
    }
    const unsigned long d = static_cast<unsigned long>(a.degree());
    // phi(t) >= sqrt(t/2), so phi(t) = d forces t <= 2 d^2.
    for (unsigned long t = 2; t <= 2 * d * d + 2; ++t) {
        if (euler_phi(t) != d) continue;
        if (cyclotomic(static_cast<unsigned>(t)) == a.minpoly()) return t;
    }
    return std::nullopt;
}

int sign_of(const AlgebraicNumber& a) {
    if (!a.is_real()) throw InvalidInput("sign of a non-real number");
    if (a.is_zero()) return 0;
    if (auto r = a.rational_value()) return sgn(*r);
    ComplexBox b = a.box();
    for (unsigned bits = 64; ; bits *= 2) {
        if (b.re.lo > 0) return 1;
        if (b.re.hi < 0) return -1;
        b = refine_box(a.minpoly(), b, two_pow_neg(bits));
    }
}

int compare_real(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!a.is_real() || !b.is_real())
        throw InvalidInput("real comparison of non-real numbers");
    if (alg_equals(a, b)) return 0;
    ComplexBox ba = a.box();
    ComplexBox bb = b.box();
    for (unsigned bits = 64; ; bits *= 2) {
        if (ba.re.hi < bb.re.lo) return -1;
        if (bb.re.hi < ba.re.lo) return 1;
        ba = refine_box(a.minpoly(), ba, two_pow_neg(bits));
        bb = refine_box(b.minpoly(), bb, two_pow_neg(bits));
    }
}

// ---- arithmetic -------------------------------------------------------------

namespace {

// Matches the exact value enclosed by successively tighter boxes against the
// roots of the candidate polynomials. The value is known to be a root of
// exactly one candidate.
AlgebraicNumber match_value(const std::vector<IntPoly>& candidates,
                            const std::function<ComplexBox(unsigned)>& value_box) {
    struct Root {
        const IntPoly* poly;
        ComplexBox box;
    };
    std::vector<Root> roots;
    for (const auto& c : candidates) {
        if (c.degree() == 1) {
            Rational r(-c[0], c[1]);
            r.canonicalize();
            roots.push_back({&c, ComplexBox::real_point(r)});
        } else {
            for (const auto& b : isolate_roots(c)) roots.push_back({&c, b});
        }
    }
    for (unsigned round = 0;; ++round) {
        const unsigned bits = 48 + 32 * round;
        ComplexBox v = value_box(bits);
        std::vector<size_t> alive;
        for (size_t i = 0; i < roots.size(); ++i)
            if (roots[i].box.intersects(v)) alive.push_back(i);
        if (alive.empty()) throw InternalError("value matches no candidate root");
        if (alive.size() == 1) {
            const Root& r = roots[alive[0]];
            if (r.poly->degree() == 1) {
                Rational val(-(*r.poly)[0], (*r.poly)[1]);
                val.canonicalize();
                return AlgebraicNumber::from_rational(val);
            }
            return alg_make_unchecked(*r.poly, r.box);
        }
        if (round > 64) throw InternalError("candidate matching did not converge");
        Rational w = two_pow_neg(bits);
        for (size_t i : alive) {
            if (roots[i].poly->degree() > 1)
                roots[i].box = refine_box(*roots[i].poly, roots[i].box, w);
        }
    }
}

std::vector<IntPoly> irreducible_factors(const IntPoly& p) {
    std::vector<IntPoly> out;
    for (const auto& [f, m] : factor_over_rationals(p)) out.push_back(f);
    return out;
}

// B(x - y) as a polynomial in y over Z[x].
std::vector<IntPoly> sum_transform(const IntPoly& b) {
    std::vector<IntPoly> acc{IntPoly::zero()};
    // Horner in t = x - y: acc(t) -> acc * t + b_j
    for (int j = b.degree(); j >= 0; --j) {
        std::vector<IntPoly> next(acc.size() + 1, IntPoly::zero());
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] = next[i] + acc[i] * IntPoly::x();  // * x
            next[i + 1] = next[i + 1] - acc[i];         // * (-y)
        }
        next[0] = next[0] + IntPoly::constant(b[j]);
        // strip top zero coefficient if untouched
        while (next.size() > 1 && next.back().is_zero()) next.pop_back();
        acc = std::move(next);
    }
    return acc;
}

// y^m * B(x/y) as a polynomial in y over Z[x].
std::vector<IntPoly> product_transform(const IntPoly& b) {
    const int m = b.degree();
    std::vector<IntPoly> out(static_cast<size_t>(m) + 1, IntPoly::zero());
    for (int j = 0; j <= m; ++j)
        out[static_cast<size_t>(m - j)] = IntPoly::monomial(static_cast<unsigned>(j), b[j]);
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace

AlgebraicNumber alg_shift(const AlgebraicNumber& a, const Rational& s) {
    if (s == 0) return a;
    if (auto r = a.rational_value()) return AlgebraicNumber::from_rational(*r + s);
    IntPoly p = minpoly_shift(a.minpoly(), s);
    RatInterval sre(a.box().re.lo + s, a.box().re.hi + s);
    ComplexBox moved(sre, a.box().im);
    return alg_make_unchecked(p, moved);
}

AlgebraicNumber alg_scale(const AlgebraicNumber& a, const Rational& s) {
    if (s == 0) return AlgebraicNumber();
    if (auto r = a.rational_value()) return AlgebraicNumber::from_rational(*r * s);
    if (s == 1) return a;
    IntPoly p = minpoly_scale(a.minpoly(), s);
    RatInterval sc = RatInterval::point(s);
    ComplexBox scaled(a.box().re * sc, a.box().im * sc);
    return alg_make_unchecked(p, scaled);
}

AlgebraicNumber alg_neg(const AlgebraicNumber& a) { return alg_scale(a, Rational(-1)); }

AlgebraicNumber alg_reciprocal(const AlgebraicNumber& a) {
    if (a.is_zero()) throw DivisionByZero("reciprocal of zero");
    if (auto r = a.rational_value()) return AlgebraicNumber::from_rational(1 / *r);
    IntPoly rev = a.minpoly().reversed().primitive_part();
    ComplexBox base = a.box();
    // Shrink until the box is clear of zero, then invert; the reciprocal of
    // an isolating box stays isolating because inversion is a bijection on
    // roots of the reversed polynomial.
    unsigned bits = 64;
    while (base.contains_zero()) {
        base = refine_box(a.minpoly(), base, two_pow_neg(bits));
        bits *= 2;
    }
    IntPoly src = a.minpoly();
    auto vbox = [src, base](unsigned req_bits) {
        ComplexBox b = refine_box(src, base, two_pow_neg(req_bits));
        return b.reciprocal();
    };
    return match_value({rev}, vbox);
}

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (auto ra = a.rational_value()) {
        if (auto rb = b.rational_value()) return AlgebraicNumber::from_rational(*ra + *rb);
        return alg_shift(b, *ra);
    }
    if (auto rb = b.rational_value()) return alg_shift(a, *rb);
    IntPoly res = resultant_y(a.minpoly(), sum_transform(b.minpoly()));
    auto candidates = irreducible_factors(res);
    IntPoly pa = a.minpoly(), pb = b.minpoly();
    ComplexBox ba = a.box(), bb = b.box();
    auto vbox = [pa, pb, ba, bb](unsigned bits) {
        Rational w = two_pow_neg(bits);
        return refine_box(pa, ba, w) + refine_box(pb, bb, w);
    };
    return match_value(candidates, vbox);
}

AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (auto ra = a.rational_value()) {
        if (auto rb = b.rational_value()) return AlgebraicNumber::from_rational(*ra * *rb);
        return alg_scale(b, *ra);
    }
    if (auto rb = b.rational_value()) return alg_scale(a, *rb);
    IntPoly res = resultant_y(a.minpoly(), product_transform(b.minpoly()));
    auto candidates = irreducible_factors(res);
    IntPoly pa = a.minpoly(), pb = b.minpoly();
    ComplexBox ba = a.box(), bb = b.box();
    auto vbox = [pa, pb, ba, bb](unsigned bits) {
        Rational w = two_pow_neg(bits);
        return refine_box(pa, ba, w) * refine_box(pb, bb, w);
    };
    return match_value(candidates, vbox);
}

AlgebraicNumber alg_sub(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return alg_add(a, alg_neg(b));
}

AlgebraicNumber alg_div(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero algebraic number");
    return alg_mul(a, alg_reciprocal(b));
}

AlgebraicNumber alg_arith(const AlgebraicNumber& a, const AlgebraicNumber& b, ArithKind k) {
    switch (k) {
        case ArithKind::add: return alg_add(a, b);
        case ArithKind::sub: return alg_sub(a, b);
        case ArithKind::mul: return alg_mul(a, b);
        case ArithKind::div: return alg_div(a, b);
    }
    throw InvalidInput("unknown arithmetic kind");
}

AlgebraicNumber alg_pow(const AlgebraicNumber& a, unsigned long n) {
    if (n == 0) return AlgebraicNumber::from_rational(Rational(1));
    if (a.is_zero()) return AlgebraicNumber();
    if (auto r = a.rational_value()) {
        Rational num = rational_pow(*r, n);
        return AlgebraicNumber::from_rational(num);
    }
    AlgebraicNumber result = AlgebraicNumber::from_rational(Rational(1));
    AlgebraicNumber base = a;
    unsigned long e = n;
    while (e) {
        if (e & 1) result = alg_mul(result, base);
        if (e >>= 1) base = alg_mul(base, base);
    }
    return result;
}

AlgebraicNumber alg_sqrt_nonneg(const AlgebraicNumber& a) {
    if (!a.is_real()) throw InvalidInput("sqrt of a non-real number");
    if (a.is_zero()) return AlgebraicNumber();
    if (sign_of(a) < 0) throw InvalidInput("sqrt of a negative number");
    if (auto r = a.rational_value()) {
        // exact square?
        Int num_root, den_root;
        if (mpz_perfect_square_p(r->get_num().get_mpz_t()) &&
            mpz_perfect_square_p(r->get_den().get_mpz_t())) {
            mpz_sqrt(num_root.get_mpz_t(), r->get_num().get_mpz_t());
            mpz_sqrt(den_root.get_mpz_t(), r->get_den().get_mpz_t());
            return AlgebraicNumber::from_rational(make_rational(num_root, den_root));
        }
    }
    auto candidates = irreducible_factors(a.minpoly().squared_argument());
    IntPoly pa = a.minpoly();
    ComplexBox ba = a.box();
    auto vbox = [pa, ba](unsigned bits) {
        ComplexBox b = refine_box(pa, ba, two_pow_neg(bits));
        Rational lo = b.re.lo < 0 ? Rational(0) : b.re.lo;
        RealInterval iv = RealInterval::from_rat_interval(RatInterval(lo, b.re.hi),
                                                          static_cast<mpfr_prec_t>(bits) + 16);
        RatInterval s = iv.sqrt().to_rat_interval();
        return ComplexBox(s, RatInterval::point(Rational(0)));
    };
    return match_value(candidates, vbox);
}

AlgebraicNumber alg_abs(const AlgebraicNumber& a) {
    if (a.is_zero()) return a;
    if (a.is_real()) return sign_of(a) >= 0 ? a : alg_neg(a);
    return alg_sqrt_nonneg(alg_mul(a, complex_conjugate_of(a)));
}

int compare_modulus(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    // quick numeric separation first
    for (unsigned bits = 64; bits <= 512; bits *= 2) {
        RatInterval sa = refined_box_bits(a, bits).abs_square();
        RatInterval sb = refined_box_bits(b, bits).abs_square();
        if (sa.hi < sb.lo) return -1;
        if (sb.hi < sa.lo) return 1;
    }
    AlgebraicNumber qa = alg_mul(a, complex_conjugate_of(a));
    AlgebraicNumber qb = alg_mul(b, complex_conjugate_of(b));
    return compare_real(qa, qb);
}

ModulusCompare compare_modulus_to_one(const AlgebraicNumber& a) {
    if (a.is_zero()) throw InvalidInput("modulus comparison of zero");
    if (auto r = a.rational_value()) {
        int c = cmp(abs(r->get_num()), r->get_den());
        if (c < 0) return ModulusCompare::less;
        if (c > 0) return ModulusCompare::greater;
        return ModulusCompare::equal;
    }
    for (unsigned bits = 64; bits <= 512; bits *= 2) {
        RatInterval s = refined_box_bits(a, bits).abs_square();
        if (s.hi < 1) return ModulusCompare::less;
        if (s.lo > 1) return ModulusCompare::greater;
    }
    // |a|^2 = a * conj(a), compared to 1 exactly.
    AlgebraicNumber sq = alg_mul(a, complex_conjugate_of(a));
    int c = compare_real(sq, AlgebraicNumber::from_rational(Rational(1)));
    if (c < 0) return ModulusCompare::less;
    if (c > 0) return ModulusCompare::greater;
    return ModulusCompare::equal;
}

} // namespace psl
