#include "psl/trajectory.hpp"

#include <cmath>
#include <ostream>
#include <thread>

#include "psl/errors.hpp"

namespace psl {
namespace {

bool all_rational(const PowerSumSpec& spec) {
    for (const auto& t : spec.terms)
        if (!t.q.is_rational() || !t.alpha.is_rational()) return false;
    return true;
}

DistanceSample exact_rational_sample(const PowerSumSpec& spec, unsigned long n) {
    Rational v(0);
    for (const auto& t : spec.terms)
        v += *t.q.rational_value() * rational_pow(*t.alpha.rational_value(), n);
    DistanceSample s;
    s.n = n;
    s.closest_integer = round_to_nearest_tie_smaller(v);
    Rational d = abs(v - Rational(s.closest_integer));
    s.exact_distance = d;
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(
        96, static_cast<mpfr_prec_t>(mpz_sizeinbase(d.get_num().get_mpz_t(), 2) +
                                     mpz_sizeinbase(d.get_den().get_mpz_t(), 2) + 8));
    s.distance = RealInterval::from_rational(d, prec);
    s.decided = true;
    return s;
}

struct Attempt {
    Int p;
    RealInterval distance;
    bool p_decided;
};

Attempt attempt_at(const PowerSumSpec& spec, unsigned long n, mpfr_prec_t prec) {
    ComplexInterval sum(RealInterval::zero(prec), RealInterval::zero(prec));
    for (const auto& t : spec.terms) {
        ComplexInterval qe = enclosure(t.q, prec);
        ComplexInterval ae = enclosure(t.alpha, prec);
        sum = sum.add(qe.mul(ae.pow_ui(n)));
    }
    Attempt at;
    Rational mid = sum.re().midpoint().to_rational();
    at.p = round_to_nearest_tie_smaller(mid);
    Rational lo = sum.re().lo().to_rational();
    Rational hi = sum.re().hi().to_rational();
    Rational half(1, 2);
    // p is certainly the closest integer when the whole enclosure rounds to
    // it: strictly above p - 1/2 and at most p + 1/2 (the tie keeps p).
    at.p_decided = (lo > Rational(at.p) - half) && (hi <= Rational(at.p) + half);
    RealInterval dx = sum.re().add_rational(Rational(-at.p));
    at.distance = dx.square().add(sum.im().square()).sqrt();
    return at;
}

std::optional<bool> theta_verdict(const DistanceSample& s, const Rational& theta_n) {
    if (s.exact_distance) return *s.exact_distance < theta_n;
    Rational hi = s.distance.hi().to_rational();
    if (hi < theta_n) return true;
    Rational lo = s.distance.lo().to_rational();
    if (lo >= theta_n) return false;
    return std::nullopt;
}

ScanRow scan_one(const PowerSumSpec& spec, unsigned long n,
                 const std::optional<Rational>& theta, const EvalOptions& opt) {
    ScanRow row;
    std::optional<Rational> theta_n;
    if (theta) theta_n = rational_pow(*theta, n);

    if (all_rational(spec)) {
        row.sample = exact_rational_sample(spec, n);
        if (theta_n) row.in_member_set = theta_verdict(row.sample, *theta_n);
    } else {
        const Rational width_target =
            Rational(1) / Rational(Int(1) << (opt.target_bits / 2 + 1));
        DistanceSample best;
        best.n = n;
        for (unsigned esc = 0; esc <= opt.max_escalations; ++esc) {
            const mpfr_prec_t prec =
                static_cast<mpfr_prec_t>(opt.target_bits) << esc;
            Attempt at = attempt_at(spec, n, prec);
            best.closest_integer = at.p;
            best.distance = at.distance;
            best.decided =
                at.p_decided && at.distance.width().to_rational() <= width_target;
            if (theta_n) {
                DistanceSample probe = best;
                row.in_member_set = theta_verdict(probe, *theta_n);
                if (best.decided && row.in_member_set.has_value()) break;
            } else if (best.decided) {
                break;
            }
        }
        row.sample = best;
    }
    if (row.sample.decided) {
        double mid = row.sample.distance.midpoint().to_double();
        if (mid > 0) {
            row.has_rate = true;
            row.rate_estimate = std::log(mid) / static_cast<double>(n);
        }
    }
    return row;
}

}  // namespace

DistanceSample eval_distance(const PowerSumSpec& spec, unsigned long n,
                             const EvalOptions& opt) {
    if (n < 1) throw InvalidInput("distance evaluation needs n >= 1");
    return scan_one(spec, n, std::nullopt, opt).sample;
}

ScanReport scan(const PowerSumSpec& spec, unsigned long n_from, unsigned long n_to,
                std::optional<Rational> theta, const EvalOptions& opt) {
    if (n_from < 1 || n_from > n_to) throw InvalidInput("invalid scan range");
    if (theta && (*theta <= 0 || *theta >= 1))
        throw InvalidInput("theta must lie in (0,1)");
    ScanReport rep;
    rep.n_from = n_from;
    rep.n_to = n_to;
    rep.theta = theta;
    const size_t count = static_cast<size_t>(n_to - n_from + 1);
    rep.rows.resize(count);

    unsigned threads = std::max(1u, opt.threads);
    threads = static_cast<unsigned>(std::min<size_t>(threads, count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i)
            rep.rows[i] = scan_one(spec, n_from + i, theta, opt);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (size_t i = t; i < count; i += threads)
                    rep.rows[i] = scan_one(spec, n_from + i, theta, opt);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rep;
}

void write_csv(const ScanReport& report, std::ostream& os) {
    os << "n,p,dist_lo,dist_hi,decided,theta_power,in_M\n";
    for (const auto& row : report.rows) {
        const auto& s = row.sample;
        os << s.n << "," << s.closest_integer.get_str() << ","
           << format_decimal(s.distance.lo(), 20) << ","
           << format_decimal(s.distance.hi(), 20) << "," << (s.decided ? 1 : 0)
           << ",";
        if (report.theta) {
            Rational tp = rational_pow(*report.theta, s.n);
            os << format_decimal(Real::from_rational(tp, 96, MPFR_RNDN), 20);
        }
        os << ",";
        if (row.in_member_set) os << (*row.in_member_set ? 1 : 0);
        os << "\n";
    }
}

std::vector<WaringRow> waring_check(unsigned k_max) {
    if (k_max < 1 || k_max > 64)
        throw InvalidInput("waring table supports 1 <= k_max <= 64");
    std::vector<WaringRow> rows;
    for (unsigned k = 1; k <= k_max; ++k) {
        Int three_k, two_k;
        mpz_ui_pow_ui(three_k.get_mpz_t(), 3, k);
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
        WaringRow r;
        r.k = k;
        r.floor_term = floor_div(three_k, two_k);
        r.g = two_k + r.floor_term - 2;
        Rational v = make_rational(three_k, two_k);
        r.closest = round_to_nearest_tie_smaller(v);
        r.distance = abs(v - Rational(r.closest));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace psl
