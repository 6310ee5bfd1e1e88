#include "psl/sml.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "psl/errors.hpp"

namespace psl {
namespace {

std::vector<Rational> reduce_vector(const std::vector<Rational>& v, const IntPoly& minpoly) {
    QPoly num{std::vector<Rational>(v)};
    auto [q, r] = num.divmod(QPoly(minpoly));
    return r.coeffs();
}

std::vector<std::vector<Rational>> normalize_coeffs(
    const std::vector<std::vector<Rational>>& coeffs, const IntPoly& minpoly) {
    std::vector<std::vector<Rational>> out;
    out.reserve(coeffs.size());
    for (const auto& v : coeffs) out.push_back(reduce_vector(v, minpoly));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

// Power sums of the roots of a polynomial, from Newton's identities.
std::vector<Rational> newton_power_sums(const IntPoly& p, size_t upto) {
    const int d = p.degree();
    std::vector<Rational> a(d);  // monic coefficients a_0..a_{d-1}
    for (int i = 0; i < d; ++i) a[i] = Rational(p[i], p[d]);
    std::vector<Rational> ps(upto + 1, Rational(0));
    ps[0] = d;
    for (size_t k = 1; k <= upto; ++k) {
        Rational acc(0);
        for (size_t i = 1; i < k; ++i) {
            int idx = d - static_cast<int>(i);
            if (idx >= 0) acc += a[idx] * ps[k - i];
        }
        int idx = d - static_cast<int>(k);
        if (idx >= 0) acc += Rational(static_cast<unsigned long>(k)) * a[idx];
        ps[k] = -acc;
    }
    return ps;
}

QPoly qpoly_mulmod(const QPoly& a, const QPoly& b, const QPoly& mod) {
    return (a * b).divmod(mod).second;
}

QPoly qpoly_powmod(unsigned long n, const QPoly& mod) {
    QPoly x(std::vector<Rational>{Rational(0), Rational(1)});
    QPoly result(std::vector<Rational>{Rational(1)});
    QPoly base = x.divmod(mod).second;
    while (n) {
        if (n & 1) result = qpoly_mulmod(result, base, mod);
        base = qpoly_mulmod(base, base, mod);
        n >>= 1;
    }
    return result;
}

// trace of the field element given by a reduced coefficient vector.
Rational trace_of(const std::vector<Rational>& reduced, const std::vector<Rational>& psums) {
    Rational t(0);
    for (size_t j = 0; j < reduced.size(); ++j) t += reduced[j] * psums[j];
    return t;
}

// Exact D*b at index n (original units) for the completed family.
Rational completed_value_times_D(const CompletedSequence& cs, unsigned long n) {
    Rational b(0);
    for (const auto& g : cs.groups) {
        QPoly mod(g.minpoly);
        auto psums = newton_power_sums(g.minpoly, static_cast<size_t>(g.minpoly.degree()));
        // e(y) = (sum_k v_k(y) n^k) * y^n mod minpoly
        QPoly base;
        Rational npow(1);
        for (const auto& v : g.q_coeffs) {
            base = base + QPoly(std::vector<Rational>(v)).scaled(npow);
            npow *= Rational(n);
        }
        base = base.divmod(mod).second;
        QPoly e = qpoly_mulmod(base, qpoly_powmod(n, mod), mod);
        b += trace_of(e.coeffs(), psums);
    }
    return b * Rational(cs.D);
}

// prod over roots of (x - root^m), computed exactly.
IntPoly power_transform(const IntPoly& minpoly, unsigned long m) {
    if (m == 1) return minpoly.primitive_part();
    std::vector<IntPoly> c(static_cast<size_t>(m) + 1, IntPoly::zero());
    c[0] = IntPoly::x();
    c[m] = IntPoly::constant(Int(-1));
    return resultant_y(minpoly.primitive_part(), c).primitive_part();
}

struct GroupBuild {
    IntPoly minpoly;
    std::vector<size_t> term_indices;
};

// The exact coefficient values Q(n) for one original term, as an algebraic
// number (powers of alpha are cached by the caller).
AlgebraicNumber coeff_value_at(const std::vector<std::vector<Rational>>& coeffs,
                               const IntPoly& minpoly,
                               const std::vector<AlgebraicNumber>& alpha_powers,
                               unsigned long n) {
    QPoly base;
    Rational npow(1);
    for (const auto& v : coeffs) {
        base = base + QPoly(std::vector<Rational>(v)).scaled(npow);
        npow *= Rational(n);
    }
    base = base.divmod(QPoly(minpoly)).second;
    AlgebraicNumber value = AlgebraicNumber::from_rational(Rational(0));
    for (size_t j = 0; j < base.coeffs().size(); ++j) {
        const Rational& c = base[j];
        if (c == 0) continue;
        AlgebraicNumber piece = alg_scale(alpha_powers[j], c);
        value = value.is_zero() ? piece : alg_add(value, piece);
    }
    return value;
}

struct Evaluator {
    // original terms with cached alpha powers
    struct Term {
        std::vector<std::vector<Rational>> coeffs;
        IntPoly minpoly;
        std::vector<AlgebraicNumber> alpha_powers;  // alpha^0 .. alpha^(d-1)
        AlgebraicNumber alpha;
    };
    std::vector<Term> terms;

    static Evaluator build(const std::vector<RecurrenceTerm>& major,
                           const std::vector<RecurrenceTerm>& dropped) {
        Evaluator ev;
        auto add = [&ev](const RecurrenceTerm& t) {
            Term term;
            term.minpoly = t.alpha.minpoly();
            term.coeffs = normalize_coeffs(t.q_coeffs, term.minpoly);
            term.alpha = t.alpha;
            AlgebraicNumber p = AlgebraicNumber::from_rational(Rational(1));
            for (int j = 0; j < term.minpoly.degree(); ++j) {
                term.alpha_powers.push_back(p);
                p = alg_mul(p, t.alpha);
            }
            ev.terms.push_back(std::move(term));
        };
        for (const auto& t : major) add(t);
        for (const auto& t : dropped) add(t);
        return ev;
    }

    // Rigorous membership of n in {\|a_n\| < theta^n}; nullopt if the
    // enclosure cannot separate at the precision ceiling.
    std::optional<bool> member(unsigned long n, const Rational& theta,
                               const EvalOptions& opt) const {
        PowerSumSpec spec;
        for (const auto& t : terms) {
            AlgebraicNumber q = coeff_value_at(t.coeffs, t.minpoly, t.alpha_powers, n);
            if (q.is_zero()) continue;
            spec.terms.push_back({q, t.alpha});
        }
        ScanReport rep = scan_internal(spec, n, theta, opt);
        return rep.rows[0].in_member_set;
    }

    static ScanReport scan_internal(const PowerSumSpec& spec, unsigned long n,
                                    const Rational& theta, const EvalOptions& opt) {
        return scan(spec, n, n, theta, opt);
    }
};

std::optional<unsigned long> torsion_m(const std::vector<RecurrenceTerm>& major) {
    if (major.empty()) return 1;
    std::vector<AlgebraicNumber> alphas;
    for (const auto& t : major) alphas.push_back(t.alpha);
    return torsion_exponent(alphas);
}

// Upper bound on |alpha| as an exact rational, certified below theta when
// possible; throws InvalidInput when |alpha| >= theta.
Rational decay_bound_below(const AlgebraicNumber& alpha, const Rational& theta,
                           const char* what) {
    for (unsigned bits = 96; bits <= (1u << 14); bits *= 2) {
        RealInterval enc = abs_enclosure(alpha, static_cast<mpfr_prec_t>(bits));
        Rational hi = enc.hi().to_rational();
        if (hi < theta) return hi;
        Rational lo = enc.lo().to_rational();
        if (lo >= theta) {
            throw InvalidInput(std::string(what) +
                               ": theta_tilde does not exceed a decaying modulus "
                               "(theta_tilde <= theta_0)");
        }
    }
    throw InternalError("decay bound comparison did not separate");
}

struct EnvelopeTerm {
    Rational coeff_bound;  // M >= sum of |coefficients|
    int degree;            // K
    Rational base;         // g < theta, rational upper bound on |alpha|
};

unsigned long envelope_threshold(const std::vector<EnvelopeTerm>& env,
                                 const Rational& theta, const Int& D) {
    // Start past every term's monotonicity point for both V(n) and
    // V(n)/theta^n, then scan for the first n where the conditions hold:
    //   (a) V(n) < theta^n
    //   (b) when D > 1: V(n) < 1/(2D) and theta^n < 1/(2D)
    unsigned long start = 1;
    for (const auto& t : env) {
        const Rational scaled = t.base / theta;
        for (const Rational& g : {t.base, scaled}) {
            unsigned long n = 1;
            for (;;) {
                Rational ratio = g * rational_pow(Rational(n + 1) / Rational(n),
                                                  static_cast<unsigned long>(t.degree));
                if (ratio <= 1) break;
                ++n;
                if (n > 1000000) throw InternalError("monotonicity search diverged");
            }
            start = std::max(start, n);
        }
    }
    const Rational half_d = D > 1 ? Rational(1, 2 * D) : Rational(0);
    for (unsigned long n = start; n <= start + 1000000; ++n) {
        Rational v(0);
        for (const auto& t : env)
            v += t.coeff_bound *
                 rational_pow(Rational(n), static_cast<unsigned long>(t.degree)) *
                 rational_pow(t.base, n);
        Rational theta_n = rational_pow(theta, n);
        if (v >= theta_n) continue;
        if (D > 1 && (v >= half_d || theta_n >= half_d)) continue;
        return n;
    }
    throw InternalError("threshold search diverged");
}

std::vector<EnvelopeTerm> build_envelope(const CompletedSequence& cs, const Rational& theta) {
    std::vector<EnvelopeTerm> env;
    auto coeff_sum_bound = [](const std::vector<std::vector<Rational>>& coeffs,
                              const AlgebraicNumber& alpha) {
        Rational total(0);
        std::vector<AlgebraicNumber> powers;
        AlgebraicNumber p = AlgebraicNumber::from_rational(Rational(1));
        for (int j = 0; j < alpha.minpoly().degree(); ++j) {
            powers.push_back(p);
            p = alg_mul(p, alpha);
        }
        for (const auto& v : coeffs) {
            AlgebraicNumber value = AlgebraicNumber::from_rational(Rational(0));
            for (size_t j = 0; j < v.size(); ++j) {
                if (v[j] == 0) continue;
                AlgebraicNumber piece = alg_scale(powers[j], v[j]);
                value = value.is_zero() ? piece : alg_add(value, piece);
            }
            if (!value.is_zero())
                total += abs_enclosure(value, 128).hi().to_rational();
        }
        return total;
    };
    for (const auto& g : cs.groups) {
        for (size_t c = 0; c < g.conjugates.size(); ++c) {
            if (g.is_member[c]) continue;
            EnvelopeTerm t;
            t.base = decay_bound_below(g.conjugates[c], theta, "adjoined conjugate");
            t.degree = g.q_degree;
            t.coeff_bound = coeff_sum_bound(g.q_coeffs, g.conjugates[c]);
            env.push_back(std::move(t));
        }
    }
    for (const auto& d : cs.dropped_small) {
        EnvelopeTerm t;
        t.base = decay_bound_below(d.alpha, theta, "small term");
        auto coeffs = normalize_coeffs(d.q_coeffs, d.alpha.minpoly());
        t.degree = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
        t.coeff_bound = coeff_sum_bound(coeffs, d.alpha);
        env.push_back(std::move(t));
    }
    return env;
}

CompletedSequence build_completion(const std::vector<RecurrenceTerm>& major,
                                   std::vector<RecurrenceTerm> dropped,
                                   unsigned long m, unsigned long residue) {
    CompletedSequence cs;
    cs.exponent_m = m;
    cs.residue = residue;
    cs.dropped_small = std::move(dropped);

    std::vector<GroupBuild> builds;
    for (size_t i = 0; i < major.size(); ++i) {
        bool placed = false;
        for (auto& b : builds) {
            if (b.minpoly == major[i].alpha.minpoly()) {
                b.term_indices.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) builds.push_back({major[i].alpha.minpoly(), {i}});
    }

    Int denom_lcm(1);
    for (const auto& b : builds) {
        ConjugateGroup g;
        g.minpoly = b.minpoly;
        const auto& first = major[b.term_indices.front()];
        if (!is_algebraic_integer(first.alpha))
            throw StructureError("alpha is not an algebraic integer");
        g.q_coeffs = normalize_coeffs(first.q_coeffs, g.minpoly);
        if (g.q_coeffs.empty()) throw InvalidInput("coefficient polynomial is zero");
        for (size_t idx : b.term_indices) {
            auto norm = normalize_coeffs(major[idx].q_coeffs, g.minpoly);
            if (norm != g.q_coeffs)
                throw StructureError(
                    "member coefficients are not Galois-compatible across the class");
        }
        g.q_degree = static_cast<int>(g.q_coeffs.size()) - 1;
        g.conjugates = conjugates_of(first.alpha);
        g.is_member.assign(g.conjugates.size(), false);
        for (size_t idx : b.term_indices) {
            bool matched = false;
            for (size_t c = 0; c < g.conjugates.size(); ++c) {
                if (!g.is_member[c] && alg_equals(major[idx].alpha, g.conjugates[c])) {
                    g.is_member[c] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) throw InternalError("term alpha missing from its conjugates");
        }
        for (const auto& v : g.q_coeffs)
            for (const auto& c : v)
                mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                        c.get_den().get_mpz_t());
        cs.groups.push_back(std::move(g));
    }

    // Least D with every D*coefficient an algebraic integer; D divides the
    // coefficient-denominator lcm, so search its divisors in order.
    std::vector<Int> divisors;
    for (Int d(1); d * d <= denom_lcm; ++d) {
        if (denom_lcm % d == 0) {
            divisors.push_back(d);
            if (d * d != denom_lcm) divisors.push_back(denom_lcm / d);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    for (const Int& d : divisors) {
        bool ok = true;
        for (const auto& g : cs.groups) {
            std::vector<AlgebraicNumber> powers;
            AlgebraicNumber p = AlgebraicNumber::from_rational(Rational(1));
            for (int j = 0; j < g.minpoly.degree(); ++j) {
                powers.push_back(p);
                p = alg_mul(p, g.conjugates.front());
            }
            for (const auto& v : g.q_coeffs) {
                AlgebraicNumber value = AlgebraicNumber::from_rational(Rational(0));
                for (size_t j = 0; j < v.size(); ++j) {
                    if (v[j] == 0) continue;
                    AlgebraicNumber piece = alg_scale(powers[j], v[j]);
                    value = value.is_zero() ? piece : alg_add(value, piece);
                }
                if (value.is_zero()) continue;
                if (!is_algebraic_integer(alg_scale(value, Rational(d)))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) {
            cs.D = d;
            break;
        }
    }

    cs.char_poly = IntPoly::constant(1);
    for (const auto& g : cs.groups) {
        IntPoly base = power_transform(g.minpoly, m);
        for (int rep = 0; rep <= g.q_degree; ++rep) cs.char_poly = cs.char_poly * base;
    }
    if (!cs.char_poly.is_zero() && cs.char_poly.degree() > 0 &&
        cs.char_poly.leading() != 1)
        throw InternalError("characteristic polynomial is not monic");
    return cs;
}

}  // namespace

std::vector<CompletedTerm> CompletedSequence::all_terms() const {
    std::vector<CompletedTerm> out;
    for (const auto& g : groups)
        for (size_t c = 0; c < g.conjugates.size(); ++c)
            out.push_back({g.q_coeffs, g.conjugates[c], !g.is_member[c]});
    return out;
}

CompletedSequence complete_sequence(const RecurrenceSpec& spec) {
    if (spec.terms.empty()) throw InvalidInput("recurrence needs at least one term");
    for (const auto& t : spec.terms) {
        if (t.alpha.is_zero()) throw InvalidInput("recurrence base must be nonzero");
        bool nonzero = false;
        for (const auto& v : t.q_coeffs)
            for (const auto& c : v)
                if (c != 0) nonzero = true;
        if (!nonzero) throw InvalidInput("coefficient polynomial must be nonzero");
    }
    for (size_t i = 0; i < spec.terms.size(); ++i)
        for (size_t j = i + 1; j < spec.terms.size(); ++j)
            if (alg_equals(spec.terms[i].alpha, spec.terms[j].alpha))
                throw InvalidInput("recurrence bases must be pairwise distinct");
    return build_completion(spec.terms, {}, 1, 0);
}

ResiduePattern residue_pattern(const CompletedSequence& cs) {
    ResiduePattern pat;
    const int L = cs.char_poly.degree();
    for (int t = 0; t < std::max(L, 1); ++t) {
        Rational v = completed_value_times_D(
            cs, cs.residue + cs.exponent_m * static_cast<unsigned long>(t));
        if (!is_integer(v))
            throw InternalError("D*b is not an integer; completion is inconsistent");
        pat.initial_values.push_back(v.get_num());
    }
    if (cs.D == 1) {
        pat.preperiod = 0;
        pat.period = 1;
        pat.zero_residues = {0};
        return pat;
    }
    const Int D = cs.D;
    auto reduce = [&D](const Int& x) {
        Int r = x % D;
        if (r < 0) r += D;
        return r;
    };
    std::vector<Int> state;
    for (const auto& v : pat.initial_values) state.push_back(reduce(v));
    // step: s_{t+L} = -sum c_j s_{t+j} (char_poly monic)
    auto step = [&](const std::vector<Int>& s) {
        Int next(0);
        for (int j = 0; j < L; ++j) next -= cs.char_poly[j] * s[j];
        std::vector<Int> out(s.begin() + 1, s.end());
        out.push_back(reduce(next));
        return out;
    };
    std::map<std::vector<Int>, unsigned long> seen;
    std::vector<std::vector<Int>> states;
    std::vector<Int> cur = state;
    for (unsigned long t = 0;; ++t) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            pat.preperiod = it->second;
            pat.period = t - it->second;
            break;
        }
        seen.emplace(cur, t);
        states.push_back(cur);
        cur = step(cur);
        if (t > 2000000) throw InternalError("pattern detection exceeded its bound");
    }
    std::set<unsigned long> zeros;
    for (unsigned long t = pat.preperiod; t < pat.preperiod + pat.period; ++t)
        if (states[t][0] == 0) zeros.insert(t % pat.period);
    pat.zero_residues.assign(zeros.begin(), zeros.end());
    return pat;
}

unsigned long effective_threshold(const CompletedSequence& cs, const Rational& theta_tilde) {
    if (theta_tilde <= 0 || theta_tilde >= 1)
        throw InvalidInput("theta_tilde must lie in (0,1)");
    auto env = build_envelope(cs, theta_tilde);
    return envelope_threshold(env, theta_tilde, cs.D);
}

Decomposition decompose(const RecurrenceSpec& spec, const Rational& theta_tilde,
                        unsigned long scan_limit, const EvalOptions& opt) {
    if (theta_tilde <= 0 || theta_tilde >= 1)
        throw InvalidInput("theta_tilde must lie in (0,1)");
    if (scan_limit < 1) throw InvalidInput("scan limit must be positive");
    if (spec.terms.empty()) throw InvalidInput("recurrence needs at least one term");
    for (const auto& t : spec.terms) {
        if (t.alpha.is_zero()) throw InvalidInput("recurrence base must be nonzero");
        bool nonzero = false;
        for (const auto& v : t.q_coeffs)
            for (const auto& c : v)
                if (c != 0) nonzero = true;
        if (!nonzero) throw InvalidInput("coefficient polynomial must be nonzero");
    }
    for (size_t i = 0; i < spec.terms.size(); ++i)
        for (size_t j = i + 1; j < spec.terms.size(); ++j)
            if (alg_equals(spec.terms[i].alpha, spec.terms[j].alpha))
                throw InvalidInput("recurrence bases must be pairwise distinct");

    Decomposition out;
    out.theta_tilde = theta_tilde;
    out.scan_limit = scan_limit;

    std::vector<RecurrenceTerm> major, dropped;
    for (const auto& t : spec.terms) {
        if (compare_modulus_to_one(t.alpha) == ModulusCompare::less)
            dropped.push_back(t);
        else
            major.push_back(t);
    }

    Evaluator ev = Evaluator::build(major, dropped);
    auto member_or_boundary = [&](unsigned long n) -> std::optional<bool> {
        return ev.member(n, theta_tilde, opt);
    };

    // Structural gate; failures fall back to the scanned finite set.
    std::string structural_failure;
    std::vector<CompletedSequence> per_residue;
    unsigned long m = 1;
    try {
        m = *torsion_m(major);
        for (unsigned long r = 0; r < m; ++r)
            per_residue.push_back(build_completion(major, dropped, m, r));
    } catch (const StructureError& e) {
        structural_failure = e.what();
    }

    if (!structural_failure.empty()) {
        out.certified = false;
        out.failure_reason = structural_failure;
        out.threshold = scan_limit + 1;
        for (unsigned long n = 1; n <= scan_limit; ++n) {
            auto verdict = member_or_boundary(n);
            if (!verdict)
                out.boundary_undecided.push_back(n);
            else if (*verdict)
                out.exceptional.push_back(n);
        }
        return out;
    }

    // Certified path: thresholds and patterns per residue class.
    unsigned long overall_threshold = 1;
    unsigned long merged_modulus = 1;
    unsigned long merged_preperiod = 0;
    std::vector<ResiduePattern> patterns;
    for (unsigned long r = 0; r < m; ++r) {
        patterns.push_back(residue_pattern(per_residue[r]));
        unsigned long n_env = effective_threshold(per_residue[r], theta_tilde);
        unsigned long n_pat = r + m * patterns[r].preperiod;
        overall_threshold = std::max({overall_threshold, n_env, n_pat});
        merged_preperiod = std::max(merged_preperiod, n_pat);
        merged_modulus = std::lcm(merged_modulus, m * patterns[r].period);
    }
    out.threshold = overall_threshold;
    out.preperiod = merged_preperiod;
    out.period = merged_modulus;
    if (scan_limit < out.threshold)
        throw InvalidInput("scan limit must reach the certified threshold N* = " +
                           std::to_string(out.threshold));

    std::set<unsigned long> residues;  // mod merged_modulus
    for (unsigned long r = 0; r < m; ++r) {
        const auto& pat = patterns[r];
        for (unsigned long rho : pat.zero_residues) {
            unsigned long base_mod = m * pat.period;
            unsigned long base_res = (r + m * rho) % base_mod;
            for (unsigned long lift = base_res; lift < merged_modulus; lift += base_mod)
                residues.insert(lift);
        }
    }
    // Canonicalize: reduce the modulus when the residue set is a union of
    // full classes of a divisor.
    unsigned long modulus = merged_modulus;
    if (!residues.empty()) {
        for (unsigned long div = 1; div <= merged_modulus; ++div) {
            if (merged_modulus % div != 0) continue;
            std::set<unsigned long> projected;
            for (unsigned long r : residues) projected.insert(r % div);
            if (projected.size() * (merged_modulus / div) != residues.size()) continue;
            bool closed = true;
            for (unsigned long r : projected) {
                for (unsigned long lift = r; lift < merged_modulus && closed; lift += div)
                    if (!residues.count(lift)) closed = false;
                if (!closed) break;
            }
            if (closed) {
                modulus = div;
                residues = std::move(projected);
                break;
            }
        }
    }
    for (unsigned long r : residues) out.progressions.push_back({r, modulus});

    auto in_progression = [&](unsigned long n) { return residues.count(n % modulus) > 0; };

    for (unsigned long n = 1; n < out.threshold; ++n) {
        auto verdict = member_or_boundary(n);
        if (!verdict) {
            out.boundary_undecided.push_back(n);
            continue;
        }
        if (*verdict && !in_progression(n)) out.exceptional.push_back(n);
        if (!*verdict && in_progression(n)) out.gaps.push_back(n);
    }
    for (unsigned long n = out.threshold; n <= scan_limit; ++n) {
        auto verdict = member_or_boundary(n);
        if (!verdict) {
            out.boundary_undecided.push_back(n);
            continue;
        }
        if (*verdict != in_progression(n))
            throw InternalError("progression cross-check failed at n = " +
                                std::to_string(n));
    }
    out.certified = true;
    return out;
}

} // namespace psl
