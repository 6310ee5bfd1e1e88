#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "psl/interval.hpp"
#include "psl/rational.hpp"

namespace psl {

// Thin RAII wrapper over mpfr_t; value semantics, explicit precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Real from_int(const Int& n, mpfr_prec_t prec, mpfr_rnd_t rnd);

    // Exact value as a rational (every finite mpfr value is dyadic).
    Rational to_rational() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }

private:
    mpfr_t v_;
};

// Closed interval with directed-rounding endpoints. All operations return
// enclosures of the exact result.
class RealInterval {
public:
    RealInterval() : lo_(2), hi_(2) {}
    RealInterval(Real lo, Real hi);
    static RealInterval from_rational(const Rational& q, mpfr_prec_t prec);
    static RealInterval from_rat_interval(const RatInterval& i, mpfr_prec_t prec);
    static RealInterval exact_int(const Int& n, mpfr_prec_t prec);
    static RealInterval zero(mpfr_prec_t prec);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    RealInterval add(const RealInterval& o) const;
    RealInterval sub(const RealInterval& o) const;
    RealInterval mul(const RealInterval& o) const;
    RealInterval div(const RealInterval& o) const;  // o must exclude zero
    RealInterval neg() const;
    RealInterval square() const;
    RealInterval sqrt() const;  // requires lo >= 0 (clamps tiny negative noise to 0)
    RealInterval log() const;   // requires lo > 0
    RealInterval abs() const;
    RealInterval pow_ui(unsigned long e) const;
    RealInterval add_rational(const Rational& q) const;
    RealInterval mul_rational(const Rational& q) const;

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const Rational& q) const {
        return lo_.cmp(q) <= 0 && hi_.cmp(q) >= 0;
    }
    bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }

    // Strict comparisons; true only when certified by the enclosure.
    bool strictly_less_than(const Rational& q) const { return hi_.cmp(q) < 0; }
    bool strictly_greater_than(const Rational& q) const { return lo_.cmp(q) > 0; }
    bool strictly_less_than(const RealInterval& o) const { return hi_.cmp(o.lo_) < 0; }

    Real width() const;
    Real midpoint() const;
    RatInterval to_rat_interval() const;

private:
    Real lo_, hi_;
};

// Rectangle enclosure of a complex value.
class ComplexInterval {
public:
    ComplexInterval() = default;
    ComplexInterval(RealInterval re, RealInterval im)
        : re_(std::move(re)), im_(std::move(im)) {}
    static ComplexInterval from_box(const ComplexBox& b, mpfr_prec_t prec);

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }

    ComplexInterval add(const ComplexInterval& o) const;
    ComplexInterval sub(const ComplexInterval& o) const;
    ComplexInterval mul(const ComplexInterval& o) const;
    ComplexInterval pow_ui(unsigned long e) const;
    RealInterval abs() const;

private:
    RealInterval re_, im_;
};

// Decimal rendering with round-to-nearest-even at `digits` significant
// digits; deterministic across platforms.
std::string format_decimal(const Real& v, int digits);

} // namespace psl
