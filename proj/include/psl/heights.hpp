#pragma once

#include "psl/algebraic.hpp"
#include "psl/real_interval.hpp"

namespace psl {

// Enclosure of an absolute logarithmic Weil height (natural log units).
struct HeightValue {
    RealInterval value;
    bool exact_zero = false;  // certified h = 0 (root of unity / +-1)

    Real rigorous_error() const { return value.width(); }
};

// Height budget f(n) with f(n)/n -> 0, in one of two closed forms:
//   power:      c * n^e       with 0 < e < 1
//   log_shaved: c * n / log(n + 2)
struct SublinearBudget {
    enum class Form { power, log_shaved };
    Form form;
    Rational c;
    Rational e;  // used by Form::power only

    static SublinearBudget power(const Rational& c, const Rational& e);
    static SublinearBudget log_shaved(const Rational& c);

    RealInterval eval(unsigned long n, mpfr_prec_t prec) const;
};

// h(a) by the Mahler-measure identity over the conjugates:
//   h(a) = (1/deg) * (log|lc| + sum of log max(1, |root|)).
// Enclosure error stays below 2^-(precision_bits/2); exact zero is detected
// through the root-of-unity test rather than numerically.
HeightValue weil_height(const AlgebraicNumber& a, unsigned precision_bits);

// True iff the height's upper bound lies below budget(n), decided by
// interval evaluation at escalating precision.
bool budget_check(const HeightValue& h, const SublinearBudget& budget, unsigned long n);

} // namespace psl
