#pragma once

#include <optional>
#include <vector>

#include "psl/pisot.hpp"
#include "psl/tuple_structure.hpp"

namespace psl {

// Outcome of the existence decision: after raising to the torsion exponent
// and collapsing, existence holds iff every reduced alpha is an algebraic
// integer and every conjugate outside the tuple has modulus < 1. theta0 is
// the sharp decay rate: the largest modulus among those outside conjugates
// (zero marker when there are none), reported in reduced-index units.
struct DecisionCertificate {
    bool exists = false;
    unsigned long exponent_m = 1;
    std::vector<AlgebraicNumber> reduced_alphas;
    ClassPartition partition;  // of the reduced tuple
    bool theta0_is_zero = true;
    std::optional<AlgebraicNumber> theta0;
    size_t extra_conjugate_count = 0;

    struct Failure {
        enum class Kind { non_integral, large_outside_conjugate } kind;
        AlgebraicNumber witness;
    };
    std::vector<Failure> failures;
};

DecisionCertificate decide_existence(const std::vector<AlgebraicNumber>& alphas);

struct PairCondition {
    size_t i, j;                 // 0-based term indices
    AlgebraicNumber conjugate;   // sigma(alpha_i) torsion-related to alpha_j
    bool holds;
};

struct ConditionReport {
    TupleClassification classification;           // condition (i)
    bool all_integral = true;                     // condition (ii)
    std::vector<size_t> non_integral_indices;
    bool conjugation_consistent = true;           // condition (iii)
    std::vector<PairCondition> pair_results;
    bool outside_conjugates_small = true;         // condition (iv)
    std::vector<AlgebraicNumber> large_outside;
    bool all_hold() const {
        return classification.verdict != TupleVerdict::neither && all_integral &&
               conjugation_consistent && outside_conjugates_small;
    }
};

// Checks conditions (i)-(iv) for the concrete tuple (q_i alpha_i^n).
ConditionReport check_conditions(const PowerSumSpec& spec, unsigned long n);

// A polynomial (or rational function) whose coefficients are polynomials in
// a fixed algebraic number: coefficient j of x^j is coeffs[j], itself a
// rational vector in powers of alpha (low-to-high).
struct FieldPoly {
    std::vector<std::vector<Rational>> coeffs;
    bool is_zero() const;
};

struct RationalFunctionOverField {
    FieldPoly numerator;
    FieldPoly denominator;
    AlgebraicNumber alpha;
};

struct RatioCheckEntry {
    size_t i, j;
    AlgebraicNumber sigma_alpha_i;  // the conjugate carrying sigma
    bool constant;
    std::optional<AlgebraicNumber> constant_value;
};

// For every conjugate sigma(alpha_i) torsion-related to alpha_j, tests
// whether R_j / sigma(R_i) is a constant rational function (exact
// cross-multiplied identity) and reports the constant.
std::vector<RatioCheckEntry> corollary1_ratio_check(
    const std::vector<RationalFunctionOverField>& rs);

struct WitnessTuple {
    unsigned long n;
    std::vector<AlgebraicNumber> qs;  // all ones on the reduced tuple
    RealInterval distance_bound;      // E * theta0^n, rigorous upper bound
};

// All-ones trace witness: the reduced power sum differs from an integer by
// at most (number of outside conjugates) * theta0^n.
WitnessTuple construct_witness(const DecisionCertificate& cert, unsigned long n);

} // namespace psl
