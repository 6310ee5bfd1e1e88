#pragma once

#include <string>
#include <vector>

#include "psl/trajectory.hpp"

namespace psl {

// One exponential-polynomial term Q(n) * alpha^n. Coefficient j of Q is a
// rational vector in powers of alpha (low-to-high), confining Q's
// coefficients to the field generated by alpha.
struct RecurrenceTerm {
    std::vector<std::vector<Rational>> q_coeffs;
    AlgebraicNumber alpha;
};

struct RecurrenceSpec {
    std::vector<RecurrenceTerm> terms;
};

// Conjugate-completed family for one minimal polynomial: every conjugate
// carries the same coefficient vectors, making the sum Galois-invariant.
struct ConjugateGroup {
    IntPoly minpoly;
    std::vector<std::vector<Rational>> q_coeffs;  // shared, reduced mod minpoly
    std::vector<AlgebraicNumber> conjugates;      // canonical order
    std::vector<bool> is_member;                  // conjugate came from the input
    int q_degree = 0;
};

struct CompletedTerm {
    std::vector<std::vector<Rational>> q_coeffs;
    AlgebraicNumber alpha;
    bool adjoined;
};

struct CompletedSequence {
    std::vector<ConjugateGroup> groups;
    std::vector<RecurrenceTerm> dropped_small;  // |alpha| < 1 terms kept aside
    Int D{1};             // least D with all D*coefficients integral
    IntPoly char_poly;    // monic; annihilates D*b along the residue class
    unsigned long exponent_m = 1;
    unsigned long residue = 0;

    std::vector<CompletedTerm> all_terms() const;
};

// Adjoins the missing conjugate terms and computes D and the characteristic
// polynomial. Requires integral alphas and Galois-compatible member
// coefficients; throws StructureError otherwise.
CompletedSequence complete_sequence(const RecurrenceSpec& spec);

struct ResiduePattern {
    unsigned long preperiod = 0;
    unsigned long period = 1;
    std::vector<unsigned long> zero_residues;  // t mod period with D*b = 0 (mod D)
    std::vector<Int> initial_values;           // exact D*b at the first L indices
};

// Eventually periodic behaviour of D*b mod D along the residue class,
// detected through the state vector of the integer recurrence.
ResiduePattern residue_pattern(const CompletedSequence& cs);

// Smallest N (certified by monotone envelope bounds) such that for every
// n >= N in the residue class, membership ||a_n|| < theta^n is equivalent to
// D*b_n = 0 (mod D). Throws InvalidInput when theta_tilde does not exceed
// every decaying modulus.
unsigned long effective_threshold(const CompletedSequence& cs, const Rational& theta_tilde);

struct Progression {
    unsigned long residue;
    unsigned long modulus;
};

struct Decomposition {
    Rational theta_tilde;
    unsigned long threshold = 1;  // N*: progressions decide membership beyond
    std::vector<unsigned long> exceptional;  // members below N* missed by progressions
    std::vector<unsigned long> gaps;         // non-members below N* matched by progressions
    std::vector<Progression> progressions;
    unsigned long preperiod = 0;
    unsigned long period = 1;
    bool certified = false;
    std::string failure_reason;  // non-empty when certified is false
    unsigned long scan_limit = 0;
    std::vector<unsigned long> boundary_undecided;  // enclosure could not separate
};

// Corollary-2 style decomposition of {n : ||a_n|| < theta^n}. When the
// structural conditions fail, falls back to the plain scanned finite set
// with certified = false.
Decomposition decompose(const RecurrenceSpec& spec, const Rational& theta_tilde,
                        unsigned long scan_limit, const EvalOptions& opt = {});

} // namespace psl
