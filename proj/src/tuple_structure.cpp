#include "psl/tuple_structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "psl/errors.hpp"

namespace psl {
namespace {

// Order of x/y when the ratio is a root of unity. Cheap modulus comparison
// filters almost every pair before exact division.
std::optional<unsigned long> ratio_torsion_order(const AlgebraicNumber& x,
                                                 const AlgebraicNumber& y) {
    if (compare_modulus(x, y) != 0) return std::nullopt;
    return root_of_unity_order(alg_div(x, y));
}

std::vector<AlgebraicNumber> powered(const std::vector<AlgebraicNumber>& alphas,
                                     unsigned long m) {
    std::vector<AlgebraicNumber> out;
    out.reserve(alphas.size());
    for (const auto& a : alphas) out.push_back(alg_pow(a, m));
    return out;
}

}  // namespace

std::vector<AlgebraicNumber> PowerSumSpec::alphas() const {
    std::vector<AlgebraicNumber> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.alpha);
    return out;
}

PowerSumSpec make_power_sum_spec(std::vector<PowerSumTerm> terms) {
    if (terms.empty()) throw InvalidInput("power sum needs at least one term");
    for (const auto& t : terms) {
        if (t.q.is_zero()) throw InvalidInput("power sum coefficient must be nonzero");
        if (t.alpha.is_zero()) throw InvalidInput("power sum base must be nonzero");
    }
    return PowerSumSpec{std::move(terms)};
}

NondegeneracyReport check_nondegenerate(const std::vector<AlgebraicNumber>& alphas) {
    for (const auto& a : alphas)
        if (a.is_zero()) throw InvalidInput("non-degeneracy test needs nonzero entries");
    for (size_t i = 0; i < alphas.size(); ++i) {
        for (size_t j = i + 1; j < alphas.size(); ++j) {
            if (auto ord = ratio_torsion_order(alphas[i], alphas[j]))
                return {false, DegeneracyWitness{i + 1, j + 1, *ord}};
        }
    }
    return {true, std::nullopt};
}

std::vector<std::vector<size_t>> equiv_classes(const std::vector<AlgebraicNumber>& alphas) {
    const size_t k = alphas.size();
    std::vector<size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<AlgebraicNumber>> conj;
    conj.reserve(k);
    for (const auto& a : alphas) conj.push_back(conjugates_of(a));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            if (find(i) == find(j)) continue;
            bool related = false;
            for (const auto& g : conj[j]) {
                if (ratio_torsion_order(alphas[i], g)) {
                    related = true;
                    break;
                }
            }
            if (related) parent[find(j)] = find(i);
        }
    }
    std::map<size_t, std::vector<size_t>> buckets;
    for (size_t i = 0; i < k; ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<size_t>> out;
    for (auto& [root, members] : buckets) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

PropertyReport property_check(const std::vector<AlgebraicNumber>& alphas) {
    PropertyReport rep{true, true, std::nullopt, std::nullopt};
    for (size_t idx = 0; idx < alphas.size() && rep.p1; ++idx) {
        auto conj = conjugates_of(alphas[idx]);
        for (size_t i = 0; i < conj.size() && rep.p1; ++i) {
            for (size_t j = 0; j < conj.size() && rep.p1; ++j) {
                if (i == j) continue;
                if (ratio_torsion_order(conj[i], conj[j])) {
                    rep.p1 = false;
                    rep.p1_witness = PropertyWitness{idx, conj[i], conj[j]};
                }
            }
        }
    }
    auto classes = equiv_classes(alphas);
    for (const auto& cls : classes) {
        for (size_t a = 0; a < cls.size() && rep.p2; ++a) {
            for (size_t b = a + 1; b < cls.size() && rep.p2; ++b) {
                if (!(alphas[cls[a]].minpoly() == alphas[cls[b]].minpoly())) {
                    rep.p2 = false;
                    rep.p2_witness = std::make_pair(cls[a], cls[b]);
                }
            }
        }
    }
    return rep;
}

unsigned long torsion_exponent(const std::vector<AlgebraicNumber>& alphas) {
    for (const auto& a : alphas)
        if (a.is_zero()) throw InvalidInput("torsion exponent needs nonzero entries");
    std::vector<AlgebraicNumber> all;
    for (const auto& a : alphas) {
        auto c = conjugates_of(a);
        all.insert(all.end(), c.begin(), c.end());
    }
    unsigned long m = 1;
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (auto ord = ratio_torsion_order(all[i], all[j]))
                m = std::lcm(m, *ord);
        }
    }
    // The lcm of ratio orders is expected to suffice; property_check is the
    // certificate, doubling is the escape hatch.
    const unsigned long max_deg = std::accumulate(
        alphas.begin(), alphas.end(), 1ul, [](unsigned long acc, const AlgebraicNumber& a) {
            return std::max(acc, static_cast<unsigned long>(a.degree()));
        });
    Int bound(1);
    for (unsigned long t = 2; t <= 2 * max_deg * max_deg; ++t)
        mpz_lcm_ui(bound.get_mpz_t(), bound.get_mpz_t(), t);
    for (;;) {
        auto rep = property_check(powered(alphas, m));
        if (rep.p1 && rep.p2) return m;
        m *= 2;
        if (Int(m) > bound)
            throw InternalError("torsion exponent search exceeded its bound");
    }
}

ReductionCertificate reduce(const PowerSumSpec& spec, unsigned long residue) {
    auto alphas = spec.alphas();
    const unsigned long m = torsion_exponent(alphas);
    if (residue >= m) throw InvalidInput("residue must lie in [0, m)");

    std::vector<AlgebraicNumber> pow_alphas = powered(alphas, m);
    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < pow_alphas.size(); ++i) {
        bool joined = false;
        for (auto& g : groups) {
            if (alg_equals(pow_alphas[g.front()], pow_alphas[i])) {
                g.push_back(i);
                joined = true;
                break;
            }
        }
        if (!joined) groups.push_back({i});
    }

    ReductionCertificate cert;
    cert.exponent_m = m;
    cert.residue = residue;
    cert.original = spec;
    for (const auto& g : groups) {
        AlgebraicNumber coeff = AlgebraicNumber::from_rational(Rational(0));
        for (size_t idx : g) {
            AlgebraicNumber contrib =
                alg_mul(spec.terms[idx].q, alg_pow(alphas[idx], residue));
            coeff = coeff.is_zero() ? contrib : alg_add(coeff, contrib);
        }
        if (g.size() > 1) {
            CollapseRecord rec;
            rec.merged_indices = g;
            for (size_t t = 1; t < g.size(); ++t) {
                auto ord = ratio_torsion_order(alphas[g.front()], alphas[g[t]]);
                rec.ratio_orders.push_back(ord.value_or(0));
            }
            cert.collapses.push_back(std::move(rec));
        }
        if (coeff.is_zero()) {
            cert.dropped_terms.push_back(g.front());
            continue;
        }
        cert.reduced.terms.push_back({coeff, pow_alphas[g.front()]});
    }

    if (!cert.reduced.terms.empty()) {
        auto nd = check_nondegenerate(cert.reduced.alphas());
        auto props = property_check(cert.reduced.alphas());
        if (!nd.nondegenerate || !props.p1 || !props.p2)
            throw InternalError("reduced tuple violates its structural guarantees");
    }
    return cert;
}

ClassPartition build_partition(const PowerSumSpec& spec) {
    auto alphas = spec.alphas();
    if (alphas.empty()) throw InvalidInput("partition of an empty tuple");
    auto nd = check_nondegenerate(alphas);
    if (!nd.nondegenerate) throw StructureError("tuple is degenerate");
    auto props = property_check(alphas);
    if (!props.p1) throw StructureError("property P1 fails");
    if (!props.p2) throw StructureError("property P2 fails");

    ClassPartition part;
    part.term_count = alphas.size();
    for (const auto& cls : equiv_classes(alphas)) {
        TupleClass tc;
        tc.member_indices = cls;
        for (size_t idx : cls) {
            tc.member_alphas.push_back(alphas[idx]);
            tc.member_qs.push_back(spec.terms[idx].q);
        }
        auto canonical = conjugates_of(alphas[cls.front()]);
        std::vector<bool> used(canonical.size(), false);
        std::vector<AlgebraicNumber> ordered;
        for (const auto& member : tc.member_alphas) {
            bool found = false;
            for (size_t c = 0; c < canonical.size(); ++c) {
                if (!used[c] && alg_equals(member, canonical[c])) {
                    used[c] = true;
                    ordered.push_back(canonical[c]);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw InternalError("class member is not among its conjugates");
        }
        for (size_t c = 0; c < canonical.size(); ++c)
            if (!used[c]) ordered.push_back(canonical[c]);
        tc.full_conjugates = std::move(ordered);
        part.classes.push_back(std::move(tc));
    }
    return part;
}

std::pair<PowerSumSpec, std::vector<PowerSumTerm>> normalize_small_terms(
    const PowerSumSpec& spec) {
    PowerSumSpec kept;
    std::vector<PowerSumTerm> dropped;
    for (const auto& t : spec.terms) {
        if (compare_modulus_to_one(t.alpha) == ModulusCompare::less)
            dropped.push_back(t);
        else
            kept.terms.push_back(t);
    }
    return {std::move(kept), std::move(dropped)};
}

} // namespace psl
