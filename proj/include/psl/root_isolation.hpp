#pragma once

#include <vector>

#include "psl/int_polynomial.hpp"
#include "psl/interval.hpp"

namespace psl {

// Isolating boxes for all complex roots of a squarefree polynomial of
// degree >= 1: exactly deg(p) pairwise disjoint boxes, one root each.
// Real roots get boxes with im = [0,0]; complex roots come in exact
// conjugate-symmetric pairs. Boxes are refined to max side <= 2^-64 and
// sorted by (re midpoint, im midpoint); the order is deterministic.
std::vector<ComplexBox> isolate_roots(const IntPoly& p);

// Shrinks an isolating box of p until max side <= target. The result still
// isolates the same root. p must be squarefree with exactly one root in box.
ComplexBox refine_box(const IntPoly& p, const ComplexBox& box,
                      const Rational& target);

} // namespace psl
