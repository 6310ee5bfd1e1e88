#include "psl/root_isolation.hpp"

#include <algorithm>
#include <cmath>

#include "psl/errors.hpp"
#include "psl/real_interval.hpp"

namespace psl {
namespace {

// ---- point complex arithmetic over mpfr (round-to-nearest) ----------------

struct PC {
    Real re, im;
    explicit PC(mpfr_prec_t p) : re(p), im(p) {}
};

PC pc_sub(const PC& a, const PC& b, mpfr_prec_t p) {
    PC r(p);
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

PC pc_mul(const PC& a, const PC& b, mpfr_prec_t p) {
    PC r(p);
    Real t1(p), t2(p);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    return r;
}

PC pc_div(const PC& a, const PC& b, mpfr_prec_t p) {
    Real d(p), t1(p), t2(p);
    mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(d.get(), t1.get(), t2.get(), MPFR_RNDN);
    PC r(p);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), r.re.get(), d.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), r.im.get(), d.get(), MPFR_RNDN);
    return r;
}

double pc_abs_d(const PC& a) {
    double x = a.re.to_double();
    double y = a.im.to_double();
    return std::hypot(x, y);
}

PC eval_poly(const IntPoly& f, const PC& z, mpfr_prec_t p) {
    PC acc(p);
    Real t(p);
    for (int i = f.degree(); i >= 0; --i) {
        PC next = pc_mul(acc, z, p);
        mpfr_set_z(t.get(), f[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(next.re.get(), next.re.get(), t.get(), MPFR_RNDN);
        acc = std::move(next);
    }
    return acc;
}

// Rigorous |f(z)| upper bound and |f'(z)| lower bound at an exact dyadic
// point; yields the certified root radius d*|f/f'|, or nullopt when the
// derivative enclosure touches zero.
std::optional<Rational> certified_radius(const IntPoly& f, const Rational& zre,
                                         const Rational& zim, mpfr_prec_t p) {
    ComplexInterval z(RealInterval::from_rational(zre, p),
                      RealInterval::from_rational(zim, p));
    ComplexInterval fz(RealInterval::zero(p), RealInterval::zero(p));
    for (int i = f.degree(); i >= 0; --i)
        fz = fz.mul(z).add(ComplexInterval(RealInterval::exact_int(f[i], p),
                                           RealInterval::zero(p)));
    IntPoly fd = f.derivative();
    ComplexInterval fdz(RealInterval::zero(p), RealInterval::zero(p));
    for (int i = fd.degree(); i >= 0; --i)
        fdz = fdz.mul(z).add(ComplexInterval(RealInterval::exact_int(fd[i], p),
                                             RealInterval::zero(p)));
    RealInterval num = fz.abs();
    RealInterval den = fdz.abs();
    if (den.lo().sign() <= 0) return std::nullopt;
    Rational up = num.hi().to_rational();
    Rational lo = den.lo().to_rational();
    return Rational(f.degree()) * up / lo;
}

// ---- Aberth-Ehrlich simultaneous root finder -------------------------------

std::vector<PC> aberth_roots(const IntPoly& f, mpfr_prec_t p) {
    const int d = f.degree();
    IntPoly fd = f.derivative();
    std::vector<PC> z;
    z.reserve(d);
    // Initial points on a slightly eccentric spiral inside the root bound.
    double bound = 1.0;
    {
        double lead = std::abs(f.leading().get_d());
        for (int i = 0; i < d; ++i) {
            double c = std::abs(f[i].get_d()) / lead;
            bound = std::max(bound, c);
        }
        bound += 1.0;
    }
    for (int j = 0; j < d; ++j) {
        double angle = 2.0 * 3.14159265358979323846 * (j + 0.354) / d + 0.77;
        double radius = bound * (0.35 + 0.55 * (j + 1.0) / d);
        PC c(p);
        mpfr_set_d(c.re.get(), radius * std::cos(angle), MPFR_RNDN);
        mpfr_set_d(c.im.get(), radius * std::sin(angle), MPFR_RNDN);
        z.push_back(std::move(c));
    }
    const int max_iter = 60 + static_cast<int>(p);
    Real eps(p);
    mpfr_set_ui_2exp(eps.get(), 1, -(p - 6), MPFR_RNDN);
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < d; ++j) {
            PC fz = eval_poly(f, z[j], p);
            PC fdz = eval_poly(fd, z[j], p);
            if (mpfr_zero_p(fz.re.get()) && mpfr_zero_p(fz.im.get())) continue;
            if (mpfr_zero_p(fdz.re.get()) && mpfr_zero_p(fdz.im.get())) {
                // nudge off a critical point
                mpfr_add_d(z[j].re.get(), z[j].re.get(), 1e-3, MPFR_RNDN);
                worst = 1.0;
                continue;
            }
            PC t = pc_div(fz, fdz, p);
            PC s(p);  // sum of 1/(z_j - z_k)
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                PC diff = pc_sub(z[j], z[k], p);
                if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get())) {
                    mpfr_add_d(z[j].im.get(), z[j].im.get(), 1e-3, MPFR_RNDN);
                    diff = pc_sub(z[j], z[k], p);
                }
                PC one(p);
                mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
                PC inv = pc_div(one, diff, p);
                mpfr_add(s.re.get(), s.re.get(), inv.re.get(), MPFR_RNDN);
                mpfr_add(s.im.get(), s.im.get(), inv.im.get(), MPFR_RNDN);
            }
            PC ts = pc_mul(t, s, p);
            PC denom(p);
            mpfr_ui_sub(denom.re.get(), 1, ts.re.get(), MPFR_RNDN);
            mpfr_neg(denom.im.get(), ts.im.get(), MPFR_RNDN);
            PC w = (mpfr_zero_p(denom.re.get()) && mpfr_zero_p(denom.im.get()))
                       ? t
                       : pc_div(t, denom, p);
            mpfr_sub(z[j].re.get(), z[j].re.get(), w.re.get(), MPFR_RNDN);
            mpfr_sub(z[j].im.get(), z[j].im.get(), w.im.get(), MPFR_RNDN);
            worst = std::max(worst, pc_abs_d(w) / std::max(1.0, pc_abs_d(z[j])));
        }
        if (worst < std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(p - 8, 900))))
            break;
    }
    // Newton polish sharpens doubles into full working precision.
    for (int round = 0; round < 4; ++round) {
        for (int j = 0; j < d; ++j) {
            PC fz = eval_poly(f, z[j], p);
            PC fdz = eval_poly(fd, z[j], p);
            if (mpfr_zero_p(fdz.re.get()) && mpfr_zero_p(fdz.im.get())) continue;
            PC w = pc_div(fz, fdz, p);
            mpfr_sub(z[j].re.get(), z[j].re.get(), w.re.get(), MPFR_RNDN);
            mpfr_sub(z[j].im.get(), z[j].im.get(), w.im.get(), MPFR_RNDN);
        }
    }
    return z;
}

// ---- real root isolation via Sturm -----------------------------------------

// Split point inside (a, b) that is not a root of chain's polynomial.
Rational nonroot_split(const IntPoly& f, const Rational& a, const Rational& b) {
    Rational mid = (a + b) / 2;
    if (f.sign_at(mid) != 0) return mid;
    Rational step = (b - a) / 16;
    for (int k = 0; k < 64; ++k) {
        Rational cand = mid + step;
        if (cand < b && f.sign_at(cand) != 0) return cand;
        step /= 2;
    }
    throw InternalError("could not find a non-root split point");
}

std::vector<RatInterval> isolate_real_roots(const IntPoly& f, const SturmChain& chain) {
    std::vector<RatInterval> done;
    Rational bound = chain.cauchy_root_bound();
    struct Item {
        Rational a, b;
        int count;
    };
    std::vector<Item> work;
    int total = chain.count_roots(-bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.count == 1) {
            done.push_back(RatInterval(it.a, it.b));
            continue;
        }
        Rational m = nonroot_split(f, it.a, it.b);
        int left = chain.count_roots(it.a, m);
        int right = it.count - left;
        if (left > 0) work.push_back({it.a, m, left});
        if (right > 0) work.push_back({m, it.b, right});
    }
    return done;
}

// Bisect an isolating real interval once, keeping the root side.
RatInterval bisect_real(const IntPoly& f, const SturmChain& chain, const RatInterval& iv) {
    if (iv.is_point()) return iv;
    Rational m = nonroot_split(f, iv.lo, iv.hi);
    if (chain.count_roots(iv.lo, m) == 1) return RatInterval(iv.lo, m);
    return RatInterval(m, iv.hi);
}

ComplexBox real_box(const RatInterval& iv) {
    return ComplexBox(iv, RatInterval::point(Rational(0)));
}

// Newton refinement of a real isolating interval; Sturm bisection fallback.
RatInterval refine_real_interval(const IntPoly& f, const SturmChain& chain,
                                 RatInterval iv, const Rational& target) {
    if (iv.width() <= target) return iv;
    mpfr_prec_t p = 128;
    Rational tq = target / 4;
    for (int attempt = 0; attempt < 6 && iv.width() > target; ++attempt) {
        // point Newton from the midpoint
        Real z = Real::from_rational(iv.mid(), p, MPFR_RNDN);
        IntPoly fd = f.derivative();
        for (int it = 0; it < 64; ++it) {
            Real fz(p), fdz(p);
            mpfr_set_zero(fz.get(), 1);
            mpfr_set_zero(fdz.get(), 1);
            for (int i = f.degree(); i >= 0; --i) {
                mpfr_mul(fz.get(), fz.get(), z.get(), MPFR_RNDN);
                mpfr_add_z(fz.get(), fz.get(), f[i].get_mpz_t(), MPFR_RNDN);
            }
            for (int i = fd.degree(); i >= 0; --i) {
                mpfr_mul(fdz.get(), fdz.get(), z.get(), MPFR_RNDN);
                mpfr_add_z(fdz.get(), fdz.get(), fd[i].get_mpz_t(), MPFR_RNDN);
            }
            if (mpfr_zero_p(fdz.get())) break;
            Real w(p);
            mpfr_div(w.get(), fz.get(), fdz.get(), MPFR_RNDN);
            mpfr_sub(z.get(), z.get(), w.get(), MPFR_RNDN);
        }
        Rational zq = z.to_rational();
        auto rad = certified_radius(f, zq, Rational(0), p);
        if (rad) {
            Rational r = *rad;
            if (r <= tq) {
                Rational a = zq - r;
                Rational b = zq + r;
                if (iv.lo <= a && b <= iv.hi) {
                    if (f.sign_at(a) == 0) return RatInterval::point(a);
                    if (f.sign_at(b) == 0) return RatInterval::point(b);
                    if (chain.count_roots(a, b) == 1) return RatInterval(a, b);
                }
            }
        }
        p *= 2;
    }
    while (iv.width() > target) iv = bisect_real(f, chain, iv);
    return iv;
}

// Newton refinement of a strictly complex isolating box.
ComplexBox refine_complex_box(const IntPoly& f, const ComplexBox& box,
                              const Rational& target) {
    if (box.max_side() <= target) return box;
    mpfr_prec_t p = 128;
    IntPoly fd = f.derivative();
    Rational tq = target / 4;
    for (int attempt = 0; attempt < 10; ++attempt, p *= 2) {
        // a couple of starting points: midpoint first, then quarter offsets
        std::vector<std::pair<Rational, Rational>> starts = {
            {box.re.mid(), box.im.mid()}};
        if (attempt >= 2) {
            Rational qw = box.re.width() / 4;
            Rational qh = box.im.width() / 4;
            starts.push_back({box.re.mid() + qw, box.im.mid() + qh});
            starts.push_back({box.re.mid() - qw, box.im.mid() - qh});
            starts.push_back({box.re.mid() + qw, box.im.mid() - qh});
            starts.push_back({box.re.mid() - qw, box.im.mid() + qh});
        }
        for (const auto& [sre, sim] : starts) {
            PC z(p);
            mpfr_set_q(z.re.get(), Rational(sre).get_mpq_t(), MPFR_RNDN);
            mpfr_set_q(z.im.get(), Rational(sim).get_mpq_t(), MPFR_RNDN);
            for (int it = 0; it < 80; ++it) {
                PC fz = eval_poly(f, z, p);
                PC fdz = eval_poly(fd, z, p);
                if (mpfr_zero_p(fdz.re.get()) && mpfr_zero_p(fdz.im.get())) break;
                PC w = pc_div(fz, fdz, p);
                mpfr_sub(z.re.get(), z.re.get(), w.re.get(), MPFR_RNDN);
                mpfr_sub(z.im.get(), z.im.get(), w.im.get(), MPFR_RNDN);
            }
            Rational zre = z.re.to_rational();
            Rational zim = z.im.to_rational();
            auto rad = certified_radius(f, zre, zim, p);
            if (!rad || *rad > tq) continue;
            Rational r = *rad;
            ComplexBox cand(RatInterval(zre - r, zre + r), RatInterval(zim - r, zim + r));
            if (box.contains_box(cand)) return cand;
        }
    }
    throw InternalError("complex box refinement did not converge");
}

}  // namespace

ComplexBox refine_box(const IntPoly& p, const ComplexBox& box, const Rational& target) {
    if (box.max_side() <= target) return box;
    IntPoly f = p.primitive_part();
    if (box.is_real_line()) {
        SturmChain chain(f);
        RatInterval iv = refine_real_interval(f, chain, box.re, target);
        return real_box(iv);
    }
    return refine_complex_box(f, box, target);
}

std::vector<ComplexBox> isolate_roots(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw InvalidInput("root isolation needs degree >= 1");
    IntPoly f = p.primitive_part();
    if (!is_squarefree(f)) throw InvalidInput("root isolation needs a squarefree polynomial");

    const Rational canonical_width = Rational(1) / Rational(Int(1) << 64);

    if (f.degree() == 1) {
        Rational root = Rational(-f[0], f[1]);
        root.canonicalize();
        return {ComplexBox::real_point(root)};
    }

    SturmChain chain(f);
    std::vector<RatInterval> reals = isolate_real_roots(f, chain);
    const int d = f.degree();
    const int r = static_cast<int>(reals.size());
    if ((d - r) % 2 != 0)
        throw InternalError("real/complex root count mismatch");
    const int pairs = (d - r) / 2;

    // Separate shared endpoints, then shrink to canonical width.
    for (bool touching = true; touching;) {
        touching = false;
        for (size_t i = 0; i + 1 < reals.size(); ++i)
            for (size_t j = i + 1; j < reals.size(); ++j)
                if (reals[i].intersects(reals[j])) {
                    reals[i] = bisect_real(f, chain, reals[i]);
                    reals[j] = bisect_real(f, chain, reals[j]);
                    touching = true;
                }
    }
    for (auto& iv : reals) iv = refine_real_interval(f, chain, iv, canonical_width);

    std::vector<ComplexBox> boxes;
    for (const auto& iv : reals) boxes.push_back(real_box(iv));

    if (pairs > 0) {
        bool placed = false;
        for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t(1) << 15); prec *= 2) {
            auto approx = aberth_roots(f, prec);
            std::vector<ComplexBox> cand;
            for (const auto& z : approx) {
                if (z.im.sign() <= 0) continue;
                Rational zre = z.re.to_rational();
                Rational zim = z.im.to_rational();
                auto rad = certified_radius(f, zre, zim, prec);
                if (!rad) continue;
                Rational rr = *rad;
                if (zim - rr <= 0) continue;  // cannot separate from the real axis
                cand.push_back(ComplexBox(RatInterval(zre - rr, zre + rr),
                                          RatInterval(zim - rr, zim + rr)));
            }
            if (static_cast<int>(cand.size()) != pairs) continue;
            std::vector<ComplexBox> all = boxes;
            for (const auto& c : cand) {
                all.push_back(c);
                all.push_back(c.conjugate());
            }
            bool disjoint = true;
            for (size_t i = 0; i < all.size() && disjoint; ++i)
                for (size_t j = i + 1; j < all.size() && disjoint; ++j)
                    if (all[i].intersects(all[j])) disjoint = false;
            if (!disjoint) continue;
            // Certified: r intervals + 2*pairs disks, pairwise disjoint, each
            // holding at least one of the d roots, so exactly one each.
            for (auto& c : cand) {
                ComplexBox refined = refine_complex_box(f, c, canonical_width);
                boxes.push_back(refined);
                boxes.push_back(refined.conjugate());
            }
            placed = true;
            break;
        }
        if (!placed) throw InternalError("complex root isolation did not converge");
    }

    std::sort(boxes.begin(), boxes.end(), [](const ComplexBox& a, const ComplexBox& b) {
        Rational ar = a.re.mid(), br = b.re.mid();
        if (ar != br) return ar < br;
        return a.im.mid() < b.im.mid();
    });
    return boxes;
}

} // namespace psl
