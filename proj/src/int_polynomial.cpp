#include "psl/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "psl/errors.hpp"

namespace psl {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Int& c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

IntPoly IntPoly::monomial(unsigned n, const Int& c) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(n + 1, Int(0));
        p.coeffs_[n] = c;
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const Int& IntPoly::operator[](size_t i) const {
    static const Int kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Int& c) const {
    if (c == 0) return IntPoly();
    std::vector<Int> out(coeffs_);
    for (auto& v : out) v *= c;
    return IntPoly(std::move(out));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> out(coeffs_);
    for (auto& c : out) c /= g;
    return IntPoly(std::move(out));
}

bool IntPoly::is_primitive() const {
    return !is_zero() && content() == 1 && leading() > 0;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<Int> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * long(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> out(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::negated_argument() const {
    std::vector<Int> out(coeffs_);
    for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::squared_argument() const {
    if (is_zero()) return IntPoly();
    std::vector<Int> out(2 * coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
    return IntPoly(std::move(out));
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int IntPoly::sign_at(const Rational& x) const {
    // p(a/b) * b^deg stays in Z; only the sign is needed.
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc(0);
    Int bpow(1);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * a + *it * bpow;
        bpow *= b;
    }
    return sgn(acc);
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree())
        throw InternalError("divide_exact: degree too small");
    std::vector<Int> rem(coeffs_);
    std::vector<Int> quot(degree() - divisor.degree() + 1, Int(0));
    const Int& dl = divisor.leading();
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        Int q;
        Int r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                    rem[k + divisor.degree()].get_mpz_t(), dl.get_mpz_t());
        if (r != 0) throw InternalError("divide_exact: not divisible");
        quot[k] = q;
        if (q != 0)
            for (int i = 0; i <= divisor.degree(); ++i)
                rem[k + i] -= q * divisor[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw InternalError("divide_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

bool IntPoly::try_divide(const IntPoly& divisor, IntPoly* quotient) const {
    if (divisor.is_zero()) return false;
    if (is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (degree() < divisor.degree()) return false;
    QPoly num(*this);
    QPoly den(divisor);
    auto [q, r] = num.divmod(den);
    if (!r.is_zero()) return false;
    if (quotient) {
        for (const auto& c : q.coeffs())
            if (c.get_den() != 1) return false;  // primitive inputs: cannot happen
        std::vector<Int> out;
        out.reserve(q.coeffs().size());
        for (const auto& c : q.coeffs()) out.push_back(c.get_num());
        *quotient = IntPoly(std::move(out));
    }
    return true;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    // Primitive PRS; degrees at desk scale keep growth harmless.
    QPoly u(a.primitive_part());
    QPoly v(b.primitive_part());
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        auto [q, r] = u.divmod(v);
        u = v;
        v = r.is_zero() ? QPoly() : QPoly(r.primitive());
    }
    return u.primitive();
}

static QPoly q_derivative(const QPoly& p) {
    if (p.degree() <= 0) return QPoly();
    std::vector<Rational> out(p.degree());
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p[i] * Rational(i);
    return QPoly(std::move(out));
}

static QPoly q_divide_exact(const QPoly& num, const QPoly& den, const char* where) {
    auto [q, r] = num.divmod(den);
    if (!r.is_zero()) throw InternalError(std::string(where) + ": division not exact");
    return q;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInput("squarefree part of zero polynomial");
    IntPoly pp = p.primitive_part();
    if (pp.degree() <= 0) return IntPoly::constant(1);
    IntPoly g = gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return q_divide_exact(QPoly(pp), QPoly(g), "squarefree_part").primitive();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInput("squarefree decomposition of zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = p.primitive_part();
    if (f.degree() <= 0) return out;
    // Yun's algorithm over Q.
    QPoly F(f);
    QPoly Fp = q_derivative(F);
    QPoly A(gcd(f, f.derivative()));
    QPoly B = q_divide_exact(F, A, "Yun");
    QPoly C = q_divide_exact(Fp, A, "Yun");
    QPoly D = C - q_derivative(B);
    int mult = 1;
    while (B.degree() > 0) {
        IntPoly ai = D.is_zero() ? B.primitive() : gcd(B.primitive(), D.primitive());
        QPoly Ai(ai);
        if (ai.degree() > 0) out.emplace_back(ai, mult);
        B = q_divide_exact(B, Ai, "Yun");
        C = q_divide_exact(D, Ai, "Yun");
        D = C - q_derivative(B);
        ++mult;
    }
    return out;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly cyclotomic(unsigned n) {
    if (n == 0) throw InvalidInput("cyclotomic index must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    IntPoly num = IntPoly::monomial(n) - IntPoly::constant(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = num.divide_exact(cyclotomic(d));
    }
    return num;
}

// ---- QPoly ----------------------------------------------------------------

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPoly::leading() const {
    if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const Rational& QPoly::operator[](size_t i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Rational& c) const {
    if (c == 0) return QPoly();
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return QPoly(std::move(out));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::compose_linear(const Rational& u, const Rational& v) const {
    QPoly acc;
    QPoly lin(std::vector<Rational>{v, u});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin;
        acc = acc + QPoly(std::vector<Rational>{*it});
    }
    return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem(coeffs_);
    if (degree() < divisor.degree()) return {QPoly(), *this};
    std::vector<Rational> quot(degree() - divisor.degree() + 1, Rational(0));
    const Rational& dl = divisor.leading();
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        Rational q = rem[k + divisor.degree()] / dl;
        quot[k] = q;
        if (q != 0)
            for (int i = 0; i <= divisor.degree(); ++i)
                rem[k + i] -= q * divisor[i];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

IntPoly QPoly::primitive() const {
    if (is_zero()) return IntPoly();
    Int den(1);
    for (const auto& c : coeffs_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        Rational scaled = c * Rational(den);
        out.push_back(scaled.get_num());
    }
    return IntPoly(std::move(out)).primitive_part();
}

IntPoly minpoly_shift(const IntPoly& p, const Rational& s) {
    // roots of q are (roots of p) + s, so q(x) = p(x - s) up to scaling.
    return QPoly(p).compose_linear(Rational(1), -s).primitive();
}

IntPoly minpoly_scale(const IntPoly& p, const Rational& s) {
    if (s == 0) throw InvalidInput("scaling minimal polynomial by zero");
    // roots of q are s * (roots of p): q(x) = p(x / s) cleared.
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    Rational sp(1);
    Rational inv = 1 / s;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        out.emplace_back(Rational(p[i]) * sp);
        sp *= inv;
    }
    return QPoly(std::move(out)).primitive();
}

// ---- Sturm ----------------------------------------------------------------

SturmChain::SturmChain(const IntPoly& p) : poly_(p.primitive_part()) {
    if (p.is_zero()) throw InvalidInput("Sturm chain of zero polynomial");
    chain_.emplace_back(poly_);
    QPoly f1(poly_.derivative());
    if (!f1.is_zero()) chain_.push_back(f1);
    while (chain_.size() >= 2 && chain_.back().degree() >= 1) {
        auto [q, r] = chain_[chain_.size() - 2].divmod(chain_.back());
        if (r.is_zero()) break;
        QPoly next = r.scaled(Rational(-1));
        // Rescale by a positive rational (primitive coefficients) to stop
        // coefficient blowup; the sign pattern is what Sturm counting uses.
        QPoly prim(next.primitive());
        chain_.push_back((next.leading() > 0) == (prim.leading() > 0)
                             ? prim
                             : prim.scaled(Rational(-1)));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int variations = 0;
    int prev = 0;
    for (const auto& f : chain_) {
        Rational v = f.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
}

Rational SturmChain::cauchy_root_bound() const {
    Rational m(0);
    const Int& lead = poly_.leading();
    for (int i = 0; i < poly_.degree(); ++i) {
        Rational c(abs(poly_[i]), abs(lead));
        if (c > m) m = c;
    }
    return m + 1;
}

// ---- Resultants -----------------------------------------------------------

IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return IntPoly::constant(1);
    for (const auto& row : m)
        if (row.size() != n) throw InternalError("bareiss: non-square matrix");
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return IntPoly();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                IntPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? IntPoly() : num.divide_exact(prev);
            }
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

IntPoly resultant_y(const IntPoly& a, const std::vector<IntPoly>& c) {
    // Sylvester matrix of a (degree n, constant-in-x coefficients) and c
    // (degree m in y, entries in Z[x]).
    int n = a.degree();
    int m = static_cast<int>(c.size()) - 1;
    while (m >= 0 && c[m].is_zero()) --m;
    if (n < 0 || m < 0) throw InvalidInput("resultant of zero polynomial");
    if (n == 0 && m == 0) return IntPoly::constant(1);
    const size_t size = static_cast<size_t>(n + m);
    std::vector<std::vector<IntPoly>> s(size, std::vector<IntPoly>(size, IntPoly()));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            s[row][row + j] = IntPoly::constant(a[n - j]);
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            s[m + row][row + j] = c[m - j];
    return bareiss_determinant(std::move(s));
}

} // namespace psl
