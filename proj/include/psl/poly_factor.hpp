#pragma once

#include <utility>
#include <vector>

#include "psl/int_polynomial.hpp"

namespace psl {

// Irreducible factorization over Q: primitive irreducible factors with
// multiplicities, product equal to the input up to a rational unit.
// Constants factor to an empty list; zero input throws InvalidInput.
std::vector<std::pair<IntPoly, int>> factor_over_rationals(const IntPoly& p);

// Factors a primitive squarefree polynomial of degree >= 1 into primitive
// irreducible polynomials (Zassenhaus: factor mod p, Hensel lift, recombine).
std::vector<IntPoly> factor_squarefree(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

} // namespace psl
