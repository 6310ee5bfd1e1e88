#include "psl/pisot.hpp"

#include "psl/errors.hpp"

namespace psl {
namespace {

void validate_betas(const std::vector<AlgebraicNumber>& betas) {
    if (betas.empty()) throw InvalidInput("tuple classification needs entries");
    for (const auto& b : betas)
        if (b.is_zero()) throw InvalidInput("tuple entries must be nonzero");
    for (size_t i = 0; i < betas.size(); ++i)
        for (size_t j = i + 1; j < betas.size(); ++j)
            if (alg_equals(betas[i], betas[j]))
                throw InvalidInput("tuple entries must be distinct");
}

// Distinct minimal polynomials among the betas, in first-seen order.
std::vector<IntPoly> distinct_minpolys(const std::vector<AlgebraicNumber>& betas) {
    std::vector<IntPoly> out;
    for (const auto& b : betas) {
        bool seen = false;
        for (const auto& p : out)
            if (p == b.minpoly()) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(b.minpoly());
    }
    return out;
}

Rational full_trace_sum(const std::vector<IntPoly>& polys) {
    Rational sum(0);
    for (const auto& p : polys) {
        const int d = p.degree();
        sum += Rational(-p[d - 1], p[d]);
    }
    return sum;
}

}  // namespace

bool is_pisot_number(const AlgebraicNumber& a) {
    if (a.is_zero() || !a.is_real()) return false;
    if (!is_algebraic_integer(a)) return false;
    if (compare_real(a, AlgebraicNumber::from_rational(Rational(1))) <= 0) return false;
    for (const auto& conj : conjugates_of(a)) {
        if (alg_equals(conj, a)) continue;
        if (compare_modulus_to_one(conj) != ModulusCompare::less) return false;
    }
    return true;
}

TupleClassification classify_tuple(const std::vector<AlgebraicNumber>& betas) {
    validate_betas(betas);
    TupleClassification out;

    auto polys = distinct_minpolys(betas);
    for (const auto& p : polys) {
        if (p.degree() == 1) continue;  // rational: no extra conjugates
        AlgebraicNumber rep;
        for (const auto& b : betas)
            if (b.minpoly() == p) {
                rep = b;
                break;
            }
        for (const auto& conj : conjugates_of(rep)) {
            bool is_member = false;
            for (const auto& b : betas)
                if (alg_equals(conj, b)) {
                    is_member = true;
                    break;
                }
            if (!is_member) out.extra_conjugates.push_back(conj);
        }
    }

    out.completed_sum = full_trace_sum(polys);

    bool sum_ok = is_integer(out.completed_sum);
    bool moduli_ok = true;
    for (const auto& beta : out.extra_conjugates) {
        if (compare_modulus_to_one(beta) != ModulusCompare::less) {
            moduli_ok = false;
            out.failing_conjugate = beta;
            break;
        }
    }
    if (!sum_ok) {
        out.verdict = TupleVerdict::neither;
        out.failure = TupleClassification::Failure::sum_not_integer;
        return out;
    }
    if (!moduli_ok) {
        out.verdict = TupleVerdict::neither;
        out.failure = TupleClassification::Failure::large_extra_conjugate;
        return out;
    }
    bool integral = true;
    for (const auto& b : betas)
        if (!is_algebraic_integer(b)) {
            integral = false;
            break;
        }
    out.verdict = integral ? TupleVerdict::pisot : TupleVerdict::pseudo_pisot;
    return out;
}

AlgebraicNumber completed_trace(const std::vector<AlgebraicNumber>& betas) {
    validate_betas(betas);
    return AlgebraicNumber::from_rational(full_trace_sum(distinct_minpolys(betas)));
}

} // namespace psl
