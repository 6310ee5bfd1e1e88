#include "psl/heights.hpp"

#include "psl/errors.hpp"
#include "psl/root_isolation.hpp"

namespace psl {

SublinearBudget SublinearBudget::power(const Rational& c, const Rational& e) {
    if (c <= 0) throw InvalidInput("budget scale must be positive");
    if (e <= 0 || e >= 1) throw InvalidInput("power budget exponent must lie in (0,1)");
    return SublinearBudget{Form::power, c, e};
}

SublinearBudget SublinearBudget::log_shaved(const Rational& c) {
    if (c <= 0) throw InvalidInput("budget scale must be positive");
    return SublinearBudget{Form::log_shaved, c, Rational(0)};
}

RealInterval SublinearBudget::eval(unsigned long n, mpfr_prec_t prec) const {
    if (n == 0) throw InvalidInput("budget index must be positive");
    if (form == Form::power) {
        // c * (n^p)^(1/q) with e = p/q
        unsigned long p = e.get_num().get_ui();
        unsigned long q = e.get_den().get_ui();
        Int npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), n, p);
        Real lo(prec), hi(prec);
        mpfr_set_z(lo.get(), npow.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(hi.get(), npow.get_mpz_t(), MPFR_RNDU);
        mpfr_rootn_ui(lo.get(), lo.get(), q, MPFR_RNDD);
        mpfr_rootn_ui(hi.get(), hi.get(), q, MPFR_RNDU);
        return RealInterval(std::move(lo), std::move(hi)).mul_rational(c);
    }
    RealInterval logn =
        RealInterval::from_rational(Rational(static_cast<unsigned long>(n + 2)), prec).log();
    return RealInterval::from_rational(Rational(n), prec).mul_rational(c).div(logn);
}

HeightValue weil_height(const AlgebraicNumber& a, unsigned precision_bits) {
    if (a.is_zero()) throw InvalidInput("height of zero is undefined");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 48;

    if (auto r = a.rational_value()) {
        if (*r == 1 || *r == -1)
            return HeightValue{RealInterval::zero(prec), true};
        Int m = abs(r->get_num());
        if (r->get_den() > m) m = r->get_den();
        return HeightValue{RealInterval::exact_int(m, prec).log(), false};
    }
    if (root_of_unity_order(a)) return HeightValue{RealInterval::zero(prec), true};

    const unsigned box_bits = precision_bits + 48;
    RealInterval total = RealInterval::exact_int(a.minpoly().leading(), prec).log();
    for (const auto& conj : conjugates_of(a)) {
        switch (compare_modulus_to_one(conj)) {
            case ModulusCompare::less:
            case ModulusCompare::equal:
                break;  // log max(1, |root|) = 0
            case ModulusCompare::greater: {
                RatInterval sq = refined_box_bits(conj, box_bits).abs_square();
                RealInterval half_log =
                    RealInterval::from_rat_interval(sq, prec).log().mul_rational(Rational(1, 2));
                total = total.add(half_log);
                break;
            }
        }
    }
    return HeightValue{total.mul_rational(Rational(1, a.degree())), false};
}

bool budget_check(const HeightValue& h, const SublinearBudget& budget, unsigned long n) {
    if (h.exact_zero) return true;  // budgets are strictly positive
    for (mpfr_prec_t prec = 96; prec <= 96 * 64; prec *= 2) {
        RealInterval b = budget.eval(n, prec);
        if (h.value.hi().cmp(b.lo()) < 0) return true;
        if (h.value.hi().cmp(b.hi()) >= 0) return false;
    }
    // Undecided after escalation can only mean the bound coincides with a
    // rational budget value; resolve exactly for the power form.
    if (budget.form == SublinearBudget::Form::power) {
        // h.hi == c * n^(p/q)  <=>  (h.hi / c)^q == n^p
        Rational lhs = h.value.hi().to_rational() / budget.c;
        Rational pw = rational_pow(lhs, budget.e.get_den().get_ui());
        Int npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), n, budget.e.get_num().get_ui());
        if (pw == Rational(npow)) return false;  // equal is not below
    }
    throw InternalError("budget comparison did not separate");
}

} // namespace psl
