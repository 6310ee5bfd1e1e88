#pragma once

#include <cstdint>

#include "psl/algebraic.hpp"
#include "psl/poly_factor.hpp"

namespace psl::testutil {

// Deterministic generator for reproducible fuzzing.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline IntPoly golden_poly() { return IntPoly({-1, -1, 1}); }

inline AlgebraicNumber phi() { return AlgebraicNumber::root_of(golden_poly(), 1); }
inline AlgebraicNumber psi_conj() { return AlgebraicNumber::root_of(golden_poly(), 0); }
inline AlgebraicNumber sqrt2() {
    return AlgebraicNumber::root_of(IntPoly({-2, 0, 1}), 1);
}
inline AlgebraicNumber minus_sqrt2() {
    return AlgebraicNumber::root_of(IntPoly({-2, 0, 1}), 0);
}
inline AlgebraicNumber plastic() {
    // real root of x^3 - x - 1; canonical order puts the complex pair first
    // (re ~ -0.66) and the real root last (re ~ 1.32)
    return AlgebraicNumber::root_of(IntPoly({-1, -1, 0, 1}), 2);
}
inline AlgebraicNumber zeta6() {
    return AlgebraicNumber::root_of(IntPoly({1, -1, 1}), 0);
}
inline AlgebraicNumber imag_unit() {
    return AlgebraicNumber::root_of(IntPoly({1, 0, 1}), 1);
}
inline AlgebraicNumber rat(long num, long den = 1) {
    return AlgebraicNumber::from_rational(make_rational(Int(num), Int(den)));
}

// Random algebraic number of degree <= max_deg with small coefficients,
// drawn as a root of a random irreducible polynomial.
inline AlgebraicNumber random_algebraic(Rng& rng, int max_deg, long coeff_bound) {
    for (;;) {
        int deg = static_cast<int>(rng.range(1, max_deg));
        std::vector<Int> c(static_cast<size_t>(deg) + 1);
        for (auto& v : c) v = rng.range(-coeff_bound, coeff_bound);
        if (c.back() == 0) c.back() = 1;
        IntPoly p(std::move(c));
        if (p.degree() < 1 || p[0] == 0) continue;
        if (!is_squarefree(p)) continue;
        auto factors = factor_squarefree(p.primitive_part());
        if (factors.size() != 1) continue;
        size_t idx = rng.next() % static_cast<size_t>(p.degree());
        AlgebraicNumber a = AlgebraicNumber::root_of(factors[0], idx);
        if (!a.is_zero()) return a;
    }
}

} // namespace psl::testutil
