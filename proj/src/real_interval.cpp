#include "psl/real_interval.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "psl/errors.hpp"

namespace psl {

Real Real::from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

Real Real::from_int(const Int& n, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_z(r.v_, n.get_mpz_t(), rnd);
    return r;
}

Rational Real::to_rational() const {
    if (!is_finite()) throw InternalError("non-finite value has no rational form");
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

RealInterval::RealInterval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.is_finite() && hi_.is_finite() && lo_.cmp(hi_) > 0)
        throw InternalError("real interval endpoints out of order");
}

RealInterval RealInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
    return RealInterval(Real::from_rational(q, prec, MPFR_RNDD),
                        Real::from_rational(q, prec, MPFR_RNDU));
}

RealInterval RealInterval::from_rat_interval(const RatInterval& i, mpfr_prec_t prec) {
    return RealInterval(Real::from_rational(i.lo, prec, MPFR_RNDD),
                        Real::from_rational(i.hi, prec, MPFR_RNDU));
}

RealInterval RealInterval::exact_int(const Int& n, mpfr_prec_t prec) {
    return RealInterval(Real::from_int(n, prec, MPFR_RNDD),
                        Real::from_int(n, prec, MPFR_RNDU));
}

RealInterval RealInterval::zero(mpfr_prec_t prec) {
    return RealInterval(Real(prec), Real(prec));
}

RealInterval RealInterval::add(const RealInterval& o) const {
    Real lo(prec()), hi(prec());
    mpfr_add(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::sub(const RealInterval& o) const {
    Real lo(prec()), hi(prec());
    mpfr_sub(lo.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::mul(const RealInterval& o) const {
    const mpfr_prec_t p = std::max(prec(), o.prec());
    Real lo(p), hi(p), t(p);
    // min of downward products, max of upward products
    mpfr_mul(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_mul(t.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), hi_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), hi_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);

    mpfr_mul(hi.get(), lo_.get(), o.lo_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), lo_.get(), o.hi_.get(), MPFR_RNDU);
    mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::div(const RealInterval& o) const {
    if (o.contains_zero()) throw DivisionByZero("interval division across zero");
    const mpfr_prec_t p = std::max(prec(), o.prec());
    Real rlo(p), rhi(p);
    mpfr_ui_div(rlo.get(), 1, o.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(rhi.get(), 1, o.lo_.get(), MPFR_RNDU);
    return mul(RealInterval(std::move(rlo), std::move(rhi)));
}

RealInterval RealInterval::neg() const {
    Real lo(prec()), hi(prec());
    mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::square() const {
    Real lo(prec()), hi(prec());
    if (contains_zero()) {
        mpfr_set_zero(lo.get(), 1);
        Real a(prec()), b(prec());
        mpfr_sqr(a.get(), lo_.get(), MPFR_RNDU);
        mpfr_sqr(b.get(), hi_.get(), MPFR_RNDU);
        mpfr_max(hi.get(), a.get(), b.get(), MPFR_RNDU);
    } else if (lo_.sign() > 0) {
        mpfr_sqr(lo.get(), lo_.get(), MPFR_RNDD);
        mpfr_sqr(hi.get(), hi_.get(), MPFR_RNDU);
    } else {
        mpfr_sqr(lo.get(), hi_.get(), MPFR_RNDD);
        mpfr_sqr(hi.get(), lo_.get(), MPFR_RNDU);
    }
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::sqrt() const {
    Real lo(prec()), hi(prec());
    if (lo_.sign() < 0) {
        // Rigorous callers guarantee the true value is nonnegative; the
        // enclosure may still dip below zero, so clamp.
        mpfr_set_zero(lo.get(), 1);
    } else {
        mpfr_sqrt(lo.get(), lo_.get(), MPFR_RNDD);
    }
    if (hi_.sign() < 0) throw InvalidInput("sqrt of a negative interval");
    mpfr_sqrt(hi.get(), hi_.get(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::log() const {
    if (lo_.sign() <= 0) throw InvalidInput("log of a non-positive interval");
    Real lo(prec()), hi(prec());
    mpfr_log(lo.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi_.get(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return neg();
    Real lo(prec()), hi(prec()), t(prec());
    mpfr_set_zero(lo.get(), 1);
    mpfr_neg(t.get(), lo_.get(), MPFR_RNDU);
    mpfr_max(hi.get(), t.get(), hi_.get(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::pow_ui(unsigned long e) const {
    RealInterval result = exact_int(Int(1), prec());
    RealInterval base = *this;
    while (e) {
        if (e & 1) result = result.mul(base);
        base = base.square();
        e >>= 1;
    }
    return result;
}

RealInterval RealInterval::add_rational(const Rational& q) const {
    Real lo(prec()), hi(prec());
    mpfr_add_q(lo.get(), lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(hi.get(), hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::mul_rational(const Rational& q) const {
    return mul(from_rational(q, prec()));
}

Real RealInterval::width() const {
    Real w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

Real RealInterval::midpoint() const {
    Real m(prec());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

RatInterval RealInterval::to_rat_interval() const {
    return RatInterval(lo_.to_rational(), hi_.to_rational());
}

ComplexInterval ComplexInterval::from_box(const ComplexBox& b, mpfr_prec_t prec) {
    return ComplexInterval(RealInterval::from_rat_interval(b.re, prec),
                           RealInterval::from_rat_interval(b.im, prec));
}

ComplexInterval ComplexInterval::add(const ComplexInterval& o) const {
    return ComplexInterval(re_.add(o.re_), im_.add(o.im_));
}

ComplexInterval ComplexInterval::sub(const ComplexInterval& o) const {
    return ComplexInterval(re_.sub(o.re_), im_.sub(o.im_));
}

ComplexInterval ComplexInterval::mul(const ComplexInterval& o) const {
    return ComplexInterval(re_.mul(o.re_).sub(im_.mul(o.im_)),
                           re_.mul(o.im_).add(im_.mul(o.re_)));
}

ComplexInterval ComplexInterval::pow_ui(unsigned long e) const {
    mpfr_prec_t p = re_.prec();
    ComplexInterval result(RealInterval::exact_int(Int(1), p), RealInterval::zero(p));
    ComplexInterval base = *this;
    while (e) {
        if (e & 1) result = result.mul(base);
        base = base.mul(base);
        e >>= 1;
    }
    return result;
}

RealInterval ComplexInterval::abs() const {
    return re_.square().add(im_.square()).sqrt();
}

std::string format_decimal(const Real& v, int digits) {
    if (!v.is_finite()) return "inf";
    if (mpfr_zero_p(v.get())) return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits),
                             v.get(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool negative = false;
    if (!mant.empty() && mant[0] == '-') {
        negative = true;
        mant.erase(0, 1);
    }
    // Trim trailing zeros but keep at least one digit.
    size_t last = mant.find_last_not_of('0');
    if (last == std::string::npos) last = 0;
    mant.erase(last + 1);
    std::ostringstream os;
    if (negative) os << "-";
    // mpfr convention: value = 0.mant * 10^exp10
    if (exp10 > 0 && exp10 <= 20 && static_cast<size_t>(exp10) >= mant.size()) {
        os << mant << std::string(static_cast<size_t>(exp10) - mant.size(), '0');
    } else if (exp10 > 0 && exp10 <= 20) {
        os << mant.substr(0, static_cast<size_t>(exp10)) << "."
           << mant.substr(static_cast<size_t>(exp10));
    } else if (exp10 <= 0 && exp10 > -6) {
        os << "0." << std::string(static_cast<size_t>(-exp10), '0') << mant;
    } else {
        os << "0." << mant << "e" << exp10;
    }
    return os.str();
}

} // namespace psl
