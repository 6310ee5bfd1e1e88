#pragma once

#include <json.hpp>

#include "psl/characterize.hpp"
#include "psl/heights.hpp"
#include "psl/sml.hpp"

namespace psl {

using Json = nlohmann::json;

// Algebraic numbers: {"rational": "p/q"} shorthand, or
// {"minpoly": [c0, c1, ...], "root": {"re": [lo, hi], "im": [lo, hi]}}
// with rational endpoints as "p/q" strings. Degree > 1 requires a root box.
Json algebraic_to_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from_json(const Json& j);

Json spec_to_json(const PowerSumSpec& spec);
// Accepts {"terms": [{"q":..., "alpha":...}]}, {"alphas": [...]} (unit
// coefficients), or a bare array of algebraic numbers.
PowerSumSpec spec_from_json(const Json& j);
std::vector<AlgebraicNumber> alphas_from_json(const Json& j);

Json budget_to_json(const SublinearBudget& b);
SublinearBudget budget_from_json(const Json& j);

Json certificate_to_json(const DecisionCertificate& cert);
// Rebuilds a certificate from its serialized form (the partition is
// reconstructed deterministically from the reduced tuple).
DecisionCertificate certificate_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// {"terms": [{"coeffs": [c, ...], "alpha": ...}]} where each c is "p/q", a
// number, or an array of "p/q" giving a polynomial in alpha.
RecurrenceSpec recurrence_from_json(const Json& j);
Json recurrence_to_json(const RecurrenceSpec& spec);

} // namespace psl
