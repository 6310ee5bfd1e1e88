#include "psl/poly_factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "psl/errors.hpp"

namespace psl {
namespace {

// ---- arithmetic in F_p[x], p an odd prime below 2^31 ----------------------

using PVec = std::vector<uint64_t>;  // low-to-high, trimmed

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t p) {
    uint64_t r = 1;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return pow_mod_u64(a % p, p - 2, p); }

PVec padd(const PVec& a, const PVec& b, uint64_t p) {
    PVec out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
    ptrim(out);
    return out;
}

PVec psub(const PVec& a, const PVec& b, uint64_t p) {
    PVec out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
    ptrim(out);
    return out;
}

PVec pmul(const PVec& a, const PVec& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    ptrim(out);
    return out;
}

// Division with remainder; divisor need not be monic.
std::pair<PVec, PVec> pdivmod(PVec num, const PVec& den, uint64_t p) {
    if (den.empty()) throw InternalError("mod-p division by zero");
    if (pdeg(num) < pdeg(den)) return {{}, num};
    PVec quot(num.size() - den.size() + 1, 0);
    const uint64_t dinv = inv_mod(den.back(), p);
    for (int k = pdeg(num) - pdeg(den); k >= 0; --k) {
        uint64_t q = num[k + den.size() - 1] * dinv % p;
        quot[k] = q;
        if (q == 0) continue;
        for (size_t i = 0; i < den.size(); ++i)
            num[k + i] = (num[k + i] + p - q * den[i] % p) % p;
    }
    ptrim(num);
    ptrim(quot);
    return {quot, num};
}

PVec pgcd(PVec a, PVec b, uint64_t p) {
    while (!b.empty()) {
        auto [q, r] = pdivmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

PVec pmod(const PVec& a, const PVec& f, uint64_t p) { return pdivmod(a, f, p).second; }

// base^e mod (f, p); e given as mpz.
PVec ppow_mod(PVec base, const Int& e, const PVec& f, uint64_t p) {
    PVec result{1};
    base = pmod(base, f, p);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = pmod(pmul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = pmod(pmul(result, base, p), f, p);
    }
    return result;
}

PVec reduce_poly_mod(const IntPoly& f, uint64_t p) {
    PVec out(f.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        Int r = f[i] % Int((unsigned long)p);
        if (r < 0) r += (unsigned long)p;
        out[i] = r.get_ui();
    }
    ptrim(out);
    return out;
}

// Deterministic generator so factorizations are reproducible run to run.
struct SplitMix {
    uint64_t s;
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

void equal_degree_split(const PVec& f, int d, uint64_t p, SplitMix& rng,
                        std::vector<PVec>& out) {
    const int n = pdeg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    // Cantor-Zassenhaus: gcd(r^((p^d - 1)/2) - 1, f) splits with prob >= 1/2.
    Int exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    for (;;) {
        PVec r(static_cast<size_t>(n), 0);
        for (auto& c : r) c = rng.next() % p;
        ptrim(r);
        if (r.empty() || pdeg(r) < 1) continue;
        PVec t = ppow_mod(r, exponent, f, p);
        if (t.empty()) continue;
        t[0] = (t[0] + p - 1) % p;
        ptrim(t);
        PVec g = pgcd(t, f, p);
        if (pdeg(g) > 0 && pdeg(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pdivmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

// Full factorization of a monic squarefree polynomial mod p.
std::vector<PVec> factor_mod_p(const PVec& f, uint64_t p) {
    std::vector<PVec> out;
    SplitMix rng{0x50534cULL ^ (p << 16) ^ static_cast<uint64_t>(pdeg(f))};
    PVec rem = f;
    PVec h{0, 1};  // x
    for (int d = 1; 2 * d <= pdeg(rem); ++d) {
        h = ppow_mod(h, Int((unsigned long)p), rem, p);
        PVec hx = psub(h, PVec{0, 1}, p);
        PVec g = pgcd(hx, rem, p);
        if (pdeg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            rem = pdivmod(rem, g, p).first;
            h = pmod(h, rem, p);
        }
    }
    if (pdeg(rem) > 0) out.push_back(rem);
    return out;
}

// ---- arithmetic in (Z/m)[x] for Hensel lifting ----------------------------

using ZVec = std::vector<Int>;

Int mod_sym(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

void ztrim(ZVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zreduce(const IntPoly& f, const Int& m) {
    ZVec out(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : out) c = mod_pos(c, m);
    ztrim(out);
    return out;
}

ZVec zmul(const ZVec& a, const ZVec& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZVec out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c = mod_pos(c, m);
    ztrim(out);
    return out;
}

ZVec zadd(const ZVec& a, const ZVec& b, const Int& m) {
    ZVec out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    for (auto& c : out) c = mod_pos(c, m);
    ztrim(out);
    return out;
}

ZVec zsub(const ZVec& a, const ZVec& b, const Int& m) {
    ZVec out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    for (auto& c : out) c = mod_pos(c, m);
    ztrim(out);
    return out;
}

// Division by a monic divisor.
std::pair<ZVec, ZVec> zdivmod_monic(ZVec num, const ZVec& den, const Int& m) {
    if (den.empty() || den.back() != 1)
        throw InternalError("Hensel division requires a monic divisor");
    if (static_cast<int>(num.size()) < static_cast<int>(den.size()))
        return {{}, num};
    ZVec quot(num.size() - den.size() + 1, Int(0));
    for (int k = static_cast<int>(num.size() - den.size()); k >= 0; --k) {
        Int q = num[k + den.size() - 1];
        quot[k] = q;
        if (q == 0) continue;
        for (size_t i = 0; i < den.size(); ++i)
            num[k + i] = mod_pos(num[k + i] - q * den[i], m);
    }
    ztrim(num);
    ztrim(quot);
    return {quot, num};
}

ZVec from_pvec(const PVec& a) {
    ZVec out;
    out.reserve(a.size());
    for (uint64_t c : a) out.emplace_back((unsigned long)c);
    return out;
}

// Bezout cofactors mod p for coprime g, h: s*g + t*h = 1.
void bezout_mod_p(const PVec& g, const PVec& h, uint64_t p, ZVec& s_out, ZVec& t_out) {
    PVec r0 = g, r1 = h;
    PVec s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(r0, r1, p);
        PVec s2 = psub(s0, pmul(q, s1, p), p);
        PVec t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (pdeg(r0) != 0) throw InternalError("bezout: inputs not coprime mod p");
    uint64_t inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s_out = from_pvec(s0);
    t_out = from_pvec(t0);
}

struct HenselPair {
    ZVec g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod current modulus)
};

// One quadratic lifting step: modulus m -> m^2 (or to cap).
HenselPair hensel_step(const ZVec& f, const HenselPair& in, const Int& m2) {
    ZVec e = zsub(f, zmul(in.g, in.h, m2), m2);
    auto [q, r] = zdivmod_monic(zmul(in.s, e, m2), in.h, m2);
    ZVec g2 = zadd(zadd(in.g, zmul(in.t, e, m2), m2), zmul(q, in.g, m2), m2);
    ZVec h2 = zadd(in.h, r, m2);
    ZVec b = zsub(zadd(zmul(in.s, g2, m2), zmul(in.t, h2, m2), m2), ZVec{Int(1)}, m2);
    auto [c, d] = zdivmod_monic(zmul(in.s, b, m2), h2, m2);
    ZVec s2 = zsub(in.s, d, m2);
    ZVec t2 = zsub(zsub(in.t, zmul(in.t, b, m2), m2), zmul(c, g2, m2), m2);
    return {g2, h2, s2, t2};
}

// Lifts the factorization f = prod(factors) from mod p to mod target
// (a power of p); f and all factors monic.
std::vector<ZVec> lift_tree(const ZVec& f, const std::vector<PVec>& factors,
                            uint64_t p, const Int& target) {
    if (factors.size() == 1) {
        ZVec out = f;
        for (auto& c : out) c = mod_pos(c, target);
        return {out};
    }
    const size_t half = factors.size() / 2;
    std::vector<PVec> left(factors.begin(), factors.begin() + half);
    std::vector<PVec> right(factors.begin() + half, factors.end());
    PVec g0{1}, h0{1};
    for (const auto& fac : left) g0 = pmul(g0, fac, p);
    for (const auto& fac : right) h0 = pmul(h0, fac, p);
    ZVec s, t;
    bezout_mod_p(g0, h0, p, s, t);
    HenselPair pair{from_pvec(g0), from_pvec(h0), s, t};
    Int m((unsigned long)p);
    while (m < target) {
        Int m2 = m * m;
        if (m2 > target * target) m2 = target * target;  // overshoot is harmless
        pair = hensel_step(f, pair, m2);
        m = m2;
    }
    for (auto& c : pair.g) c = mod_pos(c, target);
    for (auto& c : pair.h) c = mod_pos(c, target);
    ztrim(pair.g);
    ztrim(pair.h);
    auto l = lift_tree(pair.g, left, p, target);
    auto r = lift_tree(pair.h, right, p, target);
    l.insert(l.end(), r.begin(), r.end());
    return l;
}

IntPoly from_symmetric(const ZVec& a, const Int& m) {
    std::vector<Int> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(mod_sym(c, m));
    return IntPoly(std::move(out));
}

// Mignotte-style bound: any monic integer factor of monic F has coefficients
// bounded by 2^deg(F) * (1 + ||F||_2).
Int factor_coeff_bound(const IntPoly& f) {
    Int sum(0);
    for (const auto& c : f.coeffs()) sum += c * c;
    Int s = sqrt(sum) + 1;
    Int two_d;
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
    return two_d * (s + 1);
}

std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
    const int n = f.degree();
    if (n == 1) return {f};

    // Pick the odd prime (among the first few that keep f squarefree) with the
    // fewest modular factors; fewer factors mean cheaper recombination.
    uint64_t best_p = 0;
    std::vector<PVec> best_factors;
    Int prime(2);
    int good_found = 0;
    while (good_found < 3) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        uint64_t p = prime.get_ui();
        PVec fp = reduce_poly_mod(f, p);
        if (pdeg(fp) != n) continue;  // p divides lc; cannot happen for monic f
        PVec fpd = fp;
        {
            // derivative mod p
            PVec d(fp.size() - 1);
            for (size_t i = 1; i < fp.size(); ++i) d[i - 1] = fp[i] * (i % p) % p;
            ptrim(d);
            fpd = std::move(d);
        }
        if (fpd.empty() || pdeg(pgcd(fp, fpd, p)) != 0) continue;
        auto factors = factor_mod_p(fp, p);
        ++good_found;
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) return {f};  // irreducible mod p

    // Lift to a modulus big enough for symmetric recovery of any factor.
    const Int bound = factor_coeff_bound(f);
    Int target((unsigned long)best_p);
    while (target <= 2 * bound) target *= (unsigned long)best_p;
    ZVec fz = zreduce(f, target);
    std::vector<ZVec> lifted = lift_tree(fz, best_factors, best_p, target);

    std::vector<IntPoly> out;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    IntPoly rem = f;

    // Try subsets of the lifted factors, smallest first.
    for (size_t csize = 1; !live.empty() && csize <= live.size() / 2;) {
        bool found = false;
        std::vector<size_t> idx(csize);
        for (size_t i = 0; i < csize; ++i) idx[i] = i;
        for (;;) {
            ZVec prod{Int(1)};
            for (size_t i : idx) prod = zmul(prod, lifted[live[i]], target);
            IntPoly candidate = from_symmetric(prod, target);
            IntPoly quotient;
            if (!candidate.is_zero() && rem.try_divide(candidate, &quotient)) {
                out.push_back(candidate.primitive_part());
                rem = quotient;
                std::vector<size_t> next_live;
                for (size_t i = 0; i < live.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_live.push_back(live[i]);
                live = std::move(next_live);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(csize) - 1;
            while (pos >= 0 && idx[pos] == live.size() - csize + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < csize; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++csize;
    }
    if (rem.degree() > 0) out.push_back(rem.primitive_part());
    return out;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& p) {
    IntPoly f = p.primitive_part();
    if (f.degree() < 1) throw InvalidInput("factor_squarefree: degree must be >= 1");
    if (f.degree() == 1) return {f};

    // Strip a root at zero (squarefree input has it at most once).
    if (f[0] == 0) {
        std::vector<Int> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        auto rest = factor_squarefree(IntPoly(std::move(shifted)));
        rest.insert(rest.begin(), IntPoly::x());
        return rest;
    }

    // Monicize: F(x) = lc^(deg-1) * f(x/lc) is monic with integer
    // coefficients; factors map back through x -> lc*x.
    const Int lc = f.leading();
    IntPoly F;
    {
        std::vector<Int> c(f.coeffs().size());
        Int pow(1);
        for (int i = f.degree(); i >= 0; --i) {
            c[i] = f[i] * pow;
            if (i > 0) pow *= lc;
        }
        F = IntPoly(std::move(c));
    }
    auto monic_factors = factor_monic_squarefree(F.primitive_part());
    std::vector<IntPoly> out;
    out.reserve(monic_factors.size());
    for (const auto& g : monic_factors) {
        // g(lc * x), made primitive
        std::vector<Int> c(g.coeffs().size());
        Int pow(1);
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] = g[i] * pow;
            pow *= lc;
        }
        out.push_back(IntPoly(std::move(c)).primitive_part());
    }
    std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

std::vector<std::pair<IntPoly, int>> factor_over_rationals(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [sqf, mult] : squarefree_decomposition(p)) {
        for (const auto& irr : factor_squarefree(sqf)) out.emplace_back(irr, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        if (a.first.coeffs() != b.first.coeffs())
            return a.first.coeffs() < b.first.coeffs();
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.degree() < 1) return false;
    if (!is_squarefree(p)) return false;
    return factor_squarefree(p).size() == 1;
}

} // namespace psl
