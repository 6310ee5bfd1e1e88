#include "psl/interval.hpp"

#include <algorithm>
#include <sstream>

#include "psl/errors.hpp"

namespace psl {

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw InternalError("interval endpoints out of order");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
    return RatInterval(lo + o.lo, hi + o.hi);
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
    return RatInterval(lo - o.hi, hi - o.lo);
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    const Rational a = lo * o.lo;
    const Rational b = lo * o.hi;
    const Rational c = hi * o.lo;
    const Rational d = hi * o.hi;
    return RatInterval(std::min(std::min(a, b), std::min(c, d)),
                       std::max(std::max(a, b), std::max(c, d)));
}

RatInterval RatInterval::square() const {
    if (contains_zero()) {
        Rational m = std::max(hi * hi, lo * lo);
        return RatInterval(Rational(0), m);
    }
    Rational a = lo * lo;
    Rational b = hi * hi;
    return RatInterval(std::min(a, b), std::max(a, b));
}

RatInterval RatInterval::reciprocal() const {
    if (contains_zero()) throw DivisionByZero("interval reciprocal across zero");
    return RatInterval(1 / hi, 1 / lo);
}

RatInterval RatInterval::outward_round(unsigned bits) const {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rational s(scale);
    Int lo_n = rational_floor(lo * s);
    Rational hi_s = hi * s;
    Int hi_n = rational_floor(hi_s);
    if (Rational(hi_n) != hi_s) hi_n += 1;
    return RatInterval(Rational(lo_n) / s, Rational(hi_n) / s);
}

ComplexBox ComplexBox::operator+(const ComplexBox& o) const {
    return ComplexBox(re + o.re, im + o.im);
}

ComplexBox ComplexBox::operator-(const ComplexBox& o) const {
    return ComplexBox(re - o.re, im - o.im);
}

ComplexBox ComplexBox::operator*(const ComplexBox& o) const {
    return ComplexBox(re * o.re - im * o.im, re * o.im + im * o.re);
}

ComplexBox ComplexBox::reciprocal() const {
    RatInterval denom = abs_square();
    if (denom.contains_zero()) throw DivisionByZero("box reciprocal across zero");
    RatInterval inv = denom.reciprocal();
    return ComplexBox(re * inv, (-im) * inv);
}

RatInterval ComplexBox::abs_square() const {
    return re.square() + im.square();
}

std::string ComplexBox::to_string() const {
    std::ostringstream os;
    os << "[" << rational_to_string(re.lo) << ", " << rational_to_string(re.hi)
       << "] + i[" << rational_to_string(im.lo) << ", " << rational_to_string(im.hi)
       << "]";
    return os.str();
}

} // namespace psl
