#pragma once

#include <optional>
#include <vector>

#include "psl/algebraic.hpp"

namespace psl {

// Real algebraic integer > 1 whose other conjugates all have modulus < 1.
bool is_pisot_number(const AlgebraicNumber& a);

enum class TupleVerdict { pseudo_pisot, pisot, neither };

struct TupleClassification {
    TupleVerdict verdict;
    std::vector<AlgebraicNumber> extra_conjugates;  // the set B
    Rational completed_sum;  // full trace sum over the betas and B
    enum class Failure { none, sum_not_integer, large_extra_conjugate };
    Failure failure = Failure::none;
    std::optional<AlgebraicNumber> failing_conjugate;
};

// Definition check for pseudo-Pisot / Pisot tuples: B collects the missing
// conjugates, the completed sum must be a rational integer, and every member
// of B must have modulus < 1; Pisot additionally requires integral betas.
// Entries must be distinct and nonzero.
TupleClassification classify_tuple(const std::vector<AlgebraicNumber>& betas);

// Sum over the betas and their missing conjugates; always rational because
// each minimal polynomial contributes its full root sum.
AlgebraicNumber completed_trace(const std::vector<AlgebraicNumber>& betas);

} // namespace psl
