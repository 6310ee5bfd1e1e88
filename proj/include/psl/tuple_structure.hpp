#pragma once

#include <optional>
#include <vector>

#include "psl/algebraic.hpp"

namespace psl {

struct PowerSumTerm {
    AlgebraicNumber q;
    AlgebraicNumber alpha;
};

// The tuple (q_1,...,q_k; alpha_1,...,alpha_k). Terms may shrink to empty
// through coefficient cancellation during reduction; user-facing inputs are
// validated nonempty with nonzero entries.
struct PowerSumSpec {
    std::vector<PowerSumTerm> terms;

    size_t size() const { return terms.size(); }
    std::vector<AlgebraicNumber> alphas() const;
};

PowerSumSpec make_power_sum_spec(std::vector<PowerSumTerm> terms);

struct DegeneracyWitness {
    size_t i, j;              // 1-based indices into the tuple
    unsigned long order;      // order of the unit-root ratio alpha_i/alpha_j
};

struct NondegeneracyReport {
    bool nondegenerate;
    std::optional<DegeneracyWitness> witness;
};

NondegeneracyReport check_nondegenerate(const std::vector<AlgebraicNumber>& alphas);

// Partition of indices under the relation: alpha ~ beta iff some conjugate of
// beta has a unit-root ratio with alpha. Classes ordered by smallest member.
std::vector<std::vector<size_t>> equiv_classes(const std::vector<AlgebraicNumber>& alphas);

struct PropertyWitness {
    size_t index;                    // offending alpha (0-based)
    AlgebraicNumber lhs, rhs;        // offending pair
};

struct PropertyReport {
    bool p1;
    bool p2;
    std::optional<PropertyWitness> p1_witness;
    std::optional<std::pair<size_t, size_t>> p2_witness;
};

// P1: no distinct conjugate pair of any alpha has a unit-root ratio.
// P2: equivalent alphas are genuine conjugates (same minimal polynomial).
PropertyReport property_check(const std::vector<AlgebraicNumber>& alphas);

// Least common multiple of the orders of all unit-root ratios between
// conjugates drawn from the alphas, then doubled until the powered tuple
// passes property_check. The powered tuple (alpha_i^m) satisfies P1 and P2.
unsigned long torsion_exponent(const std::vector<AlgebraicNumber>& alphas);

struct CollapseRecord {
    std::vector<size_t> merged_indices;       // 0-based indices into original
    std::vector<unsigned long> ratio_orders;  // order of alpha_first/alpha_other
};

struct ReductionCertificate {
    unsigned long exponent_m;
    unsigned long residue;
    PowerSumSpec original;
    PowerSumSpec reduced;                 // alphas are m-th powers, merged
    std::vector<CollapseRecord> collapses;
    std::vector<size_t> dropped_terms;    // groups whose merged coefficient vanished
};

// Substitutes n = residue + m*ntilde and collapses terms whose powered
// alphas coincide; value-preserving on the residue class.
ReductionCertificate reduce(const PowerSumSpec& spec, unsigned long residue);

struct TupleClass {
    std::vector<size_t> member_indices;            // into spec.terms
    std::vector<AlgebraicNumber> member_alphas;    // size m_i
    std::vector<AlgebraicNumber> member_qs;
    std::vector<AlgebraicNumber> full_conjugates;  // size d_i, members first
    size_t class_size() const { return member_alphas.size(); }
    size_t conjugate_count() const { return full_conjugates.size(); }
};

struct ClassPartition {
    std::vector<TupleClass> classes;
    size_t term_count = 0;
};

// Requires non-degeneracy, P1 and P2; throws StructureError naming the
// failed property otherwise.
ClassPartition build_partition(const PowerSumSpec& spec);

// Splits off terms with |alpha| < 1 (exact test); the kept spec has all
// |alpha| >= 1.
std::pair<PowerSumSpec, std::vector<PowerSumTerm>> normalize_small_terms(
    const PowerSumSpec& spec);

} // namespace psl
