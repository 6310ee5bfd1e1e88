#pragma once

#include <string>

#include "psl/rational.hpp"

namespace psl {

// Closed interval with exact rational endpoints.
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h);
    static RatInterval point(const Rational& v) { return RatInterval(v, v); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }
    bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool contains_interval(const RatInterval& o) const {
        return lo <= o.lo && o.hi <= hi;
    }

    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator-() const { return RatInterval(-hi, -lo); }
    RatInterval square() const;
    // Requires 0 outside the interval.
    RatInterval reciprocal() const;

    // Round endpoints outward onto the dyadic grid 2^-bits; bounds
    // denominator growth in iterated arithmetic.
    RatInterval outward_round(unsigned bits) const;
};

// Axis-aligned rectangle in C with rational endpoints.
struct ComplexBox {
    RatInterval re, im;

    ComplexBox() = default;
    ComplexBox(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexBox real_point(const Rational& v) {
        return ComplexBox(RatInterval::point(v), RatInterval::point(Rational(0)));
    }

    bool is_real_line() const { return im.is_point() && im.lo == 0; }
    bool intersects(const ComplexBox& o) const {
        return re.intersects(o.re) && im.intersects(o.im);
    }
    bool contains_box(const ComplexBox& o) const {
        return re.contains_interval(o.re) && im.contains_interval(o.im);
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Rational max_side() const {
        Rational w = re.width();
        Rational h = im.width();
        return w > h ? w : h;
    }

    ComplexBox operator+(const ComplexBox& o) const;
    ComplexBox operator-(const ComplexBox& o) const;
    ComplexBox operator*(const ComplexBox& o) const;
    ComplexBox operator-() const { return ComplexBox(-re, -im); }
    ComplexBox conjugate() const { return ComplexBox(re, -im); }
    // Requires the box to exclude zero.
    ComplexBox reciprocal() const;
    // Interval enclosure of |z|^2 over the box.
    RatInterval abs_square() const;

    ComplexBox outward_round(unsigned bits) const {
        return ComplexBox(re.outward_round(bits), im.outward_round(bits));
    }

    std::string to_string() const;
};

} // namespace psl
