#include "psl/characterize.hpp"

#include <algorithm>

#include "psl/errors.hpp"

namespace psl {
namespace {

std::optional<unsigned long> ratio_torsion_order(const AlgebraicNumber& x,
                                                 const AlgebraicNumber& y) {
    if (compare_modulus(x, y) != 0) return std::nullopt;
    return root_of_unity_order(alg_div(x, y));
}

// Horner evaluation of a rational vector at an algebraic point.
AlgebraicNumber eval_vector_at(const std::vector<Rational>& coeffs,
                               const AlgebraicNumber& alpha) {
    AlgebraicNumber acc = AlgebraicNumber::from_rational(Rational(0));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc.is_zero() ? AlgebraicNumber::from_rational(*it)
                            : alg_add(alg_mul(acc, alpha), AlgebraicNumber::from_rational(*it));
    }
    return acc;
}

// Reduce a coefficient vector modulo the minimal polynomial so its length
// stays below the degree.
std::vector<Rational> reduce_vector(const std::vector<Rational>& v, const IntPoly& minpoly) {
    QPoly num{std::vector<Rational>(v)};
    auto [q, r] = num.divmod(QPoly(minpoly));
    std::vector<Rational> out(r.coeffs());
    return out;
}

using AlgPoly = std::vector<AlgebraicNumber>;  // low-to-high, trimmed

void trim(AlgPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

AlgPoly alg_poly_mul(const AlgPoly& a, const AlgPoly& b) {
    if (a.empty() || b.empty()) return {};
    AlgPoly out(a.size() + b.size() - 1, AlgebraicNumber());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            AlgebraicNumber prod = alg_mul(a[i], b[j]);
            out[i + j] = out[i + j].is_zero() ? prod : alg_add(out[i + j], prod);
        }
    }
    trim(out);
    return out;
}

AlgPoly field_poly_at(const FieldPoly& p, const AlgebraicNumber& point,
                      const IntPoly& reduce_mod) {
    AlgPoly out;
    for (const auto& v : p.coeffs)
        out.push_back(eval_vector_at(reduce_vector(v, reduce_mod), point));
    trim(out);
    return out;
}

}  // namespace

bool FieldPoly::is_zero() const {
    for (const auto& v : coeffs)
        for (const auto& c : v)
            if (c != 0) return false;
    return true;
}

DecisionCertificate decide_existence(const std::vector<AlgebraicNumber>& alphas) {
    if (alphas.empty()) throw StructureError("empty tuple");
    for (const auto& a : alphas) {
        if (a.is_zero()) throw StructureError("tuple entries must be nonzero");
        if (compare_modulus_to_one(a) == ModulusCompare::less)
            throw StructureError("tuple entries must have modulus >= 1 "
                                 "(apply small-term normalization first)");
    }

    DecisionCertificate cert;
    cert.exponent_m = torsion_exponent(alphas);

    // Raise to the m-th power and collapse equal values; coefficients play no
    // role in the existence decision.
    for (const auto& a : alphas) {
        AlgebraicNumber p = alg_pow(a, cert.exponent_m);
        bool dup = false;
        for (const auto& seen : cert.reduced_alphas)
            if (alg_equals(seen, p)) {
                dup = true;
                break;
            }
        if (!dup) cert.reduced_alphas.push_back(p);
    }

    std::vector<PowerSumTerm> ones;
    for (const auto& a : cert.reduced_alphas)
        ones.push_back({AlgebraicNumber::from_rational(Rational(1)), a});
    cert.partition = build_partition(make_power_sum_spec(std::move(ones)));

    for (const auto& a : cert.reduced_alphas) {
        if (!is_algebraic_integer(a))
            cert.failures.push_back(
                {DecisionCertificate::Failure::Kind::non_integral, a});
    }
    std::vector<AlgebraicNumber> extras;
    for (const auto& cls : cert.partition.classes) {
        for (size_t j = cls.class_size(); j < cls.conjugate_count(); ++j) {
            const auto& beta = cls.full_conjugates[j];
            extras.push_back(beta);
            if (compare_modulus_to_one(beta) != ModulusCompare::less)
                cert.failures.push_back(
                    {DecisionCertificate::Failure::Kind::large_outside_conjugate, beta});
        }
    }
    cert.extra_conjugate_count = extras.size();
    cert.exists = cert.failures.empty();

    if (cert.exists && !extras.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < extras.size(); ++i)
            if (compare_modulus(extras[i], extras[best]) > 0) best = i;
        cert.theta0_is_zero = false;
        cert.theta0 = alg_abs(extras[best]);
    }
    return cert;
}

ConditionReport check_conditions(const PowerSumSpec& spec, unsigned long n) {
    if (n < 1) throw InvalidInput("condition check needs n >= 1");
    ConditionReport rep;

    std::vector<AlgebraicNumber> values;
    for (const auto& t : spec.terms)
        values.push_back(alg_mul(t.q, alg_pow(t.alpha, n)));
    rep.classification = classify_tuple(values);

    for (size_t i = 0; i < spec.terms.size(); ++i) {
        if (!is_algebraic_integer(spec.terms[i].alpha)) {
            rep.all_integral = false;
            rep.non_integral_indices.push_back(i);
        }
    }

    // (iii): for each conjugate of alpha_i torsion-related to alpha_j, the
    // matching conjugate of q_i alpha_i^n must equal q_j alpha_j^n.
    for (size_t i = 0; i < spec.terms.size(); ++i) {
        auto conj_i = conjugates_of(spec.terms[i].alpha);
        std::vector<AlgebraicNumber> value_conj;  // filled lazily
        for (size_t j = 0; j < spec.terms.size(); ++j) {
            for (const auto& beta : conj_i) {
                if (!ratio_torsion_order(beta, spec.terms[j].alpha)) continue;
                bool holds;
                if (spec.terms[i].q.is_rational()) {
                    AlgebraicNumber lhs = alg_mul(spec.terms[i].q, alg_pow(beta, n));
                    holds = alg_equals(lhs, values[j]);
                } else {
                    if (value_conj.empty()) value_conj = conjugates_of(values[i]);
                    holds = false;
                    for (const auto& w : value_conj)
                        if (alg_equals(w, values[j])) {
                            holds = true;
                            break;
                        }
                }
                rep.pair_results.push_back({i, j, beta, holds});
                if (!holds) rep.conjugation_consistent = false;
            }
        }
    }

    // (iv): conjugates torsion-related to no tuple entry must be small.
    for (size_t i = 0; i < spec.terms.size(); ++i) {
        for (const auto& beta : conjugates_of(spec.terms[i].alpha)) {
            bool related = false;
            for (const auto& t : spec.terms)
                if (ratio_torsion_order(beta, t.alpha)) {
                    related = true;
                    break;
                }
            if (related) continue;
            if (compare_modulus_to_one(beta) != ModulusCompare::less) {
                rep.outside_conjugates_small = false;
                rep.large_outside.push_back(beta);
            }
        }
    }
    return rep;
}

std::vector<RatioCheckEntry> corollary1_ratio_check(
    const std::vector<RationalFunctionOverField>& rs) {
    for (const auto& r : rs) {
        if (r.numerator.is_zero() || r.denominator.is_zero())
            throw InvalidInput("rational functions must be nonzero");
        if (r.alpha.is_zero()) throw InvalidInput("base number must be nonzero");
    }
    std::vector<RatioCheckEntry> out;
    for (size_t i = 0; i < rs.size(); ++i) {
        auto conj_i = conjugates_of(rs[i].alpha);
        for (size_t j = 0; j < rs.size(); ++j) {
            for (const auto& beta : conj_i) {
                if (!ratio_torsion_order(beta, rs[j].alpha)) continue;
                // sigma maps alpha_i -> beta inside the coefficients.
                AlgPoly num_sigma = field_poly_at(rs[i].numerator, beta, rs[i].alpha.minpoly());
                AlgPoly den_sigma = field_poly_at(rs[i].denominator, beta, rs[i].alpha.minpoly());
                AlgPoly num_j = field_poly_at(rs[j].numerator, rs[j].alpha, rs[j].alpha.minpoly());
                AlgPoly den_j = field_poly_at(rs[j].denominator, rs[j].alpha, rs[j].alpha.minpoly());
                // R_j / sigma(R_i) = (num_j * den_sigma) / (num_sigma * den_j)
                AlgPoly s = alg_poly_mul(num_j, den_sigma);
                AlgPoly t = alg_poly_mul(num_sigma, den_j);
                RatioCheckEntry entry{i, j, beta, false, std::nullopt};
                if (!s.empty() && s.size() == t.size()) {
                    AlgebraicNumber c = alg_div(s.back(), t.back());
                    bool proportional = true;
                    for (size_t d = 0; d + 1 < s.size() && proportional; ++d) {
                        AlgebraicNumber lhs = s[d];
                        AlgebraicNumber rhs = alg_mul(c, t[d]);
                        if (lhs.is_zero() && rhs.is_zero()) continue;
                        if (lhs.is_zero() != rhs.is_zero() || !alg_equals(lhs, rhs))
                            proportional = false;
                    }
                    if (proportional) {
                        entry.constant = true;
                        entry.constant_value = c;
                    }
                }
                out.push_back(std::move(entry));
            }
        }
    }
    return out;
}

WitnessTuple construct_witness(const DecisionCertificate& cert, unsigned long n) {
    if (!cert.exists)
        throw InvalidInput("witness construction requires an existence certificate");
    if (n < 1) throw InvalidInput("witness index must be positive");
    WitnessTuple w;
    w.n = n;
    for (size_t i = 0; i < cert.reduced_alphas.size(); ++i)
        w.qs.push_back(AlgebraicNumber::from_rational(Rational(1)));
    const mpfr_prec_t prec = 192;
    if (cert.theta0_is_zero) {
        w.distance_bound = RealInterval::zero(prec);
    } else {
        RealInterval t0 = abs_enclosure(*cert.theta0, prec);
        w.distance_bound = t0.pow_ui(n).mul_rational(
            Rational(static_cast<unsigned long>(cert.extra_conjugate_count)));
    }
    return w;
}

} // namespace psl
