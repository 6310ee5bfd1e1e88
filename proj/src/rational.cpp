#include "psl/rational.hpp"

namespace psl {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(text);
            return Rational(n);
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InvalidInput("malformed rational literal: " + text);
    }
}

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned long n) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    // num/den already coprime, so the powers are too.
    return out;
}

Int round_to_nearest_tie_smaller(const Rational& r) {
    const Int fl = rational_floor(r);
    const Rational frac = r - Rational(fl);
    // frac in [0,1); tie at exactly 1/2 keeps the smaller integer.
    if (2 * frac.get_num() > frac.get_den()) return fl + 1;
    return fl;
}

std::optional<long> to_long(const Int& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return v.get_si();
}

} // namespace psl
