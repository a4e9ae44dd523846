#include "ritt/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ritt/errors.hpp"
#include "ritt/integer.hpp"

namespace ritt {

std::string to_string(const Rat& value) {
    Rat r = value;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
Poly Poly::identity() { return Poly(std::vector<Rat>{0, 1}); }
Poly Poly::linear(const Rat& a, const Rat& b) { return Poly(std::vector<Rat>{b, a}); }

Poly Poly::monomial(const Rat& c, unsigned k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& Poly::lead() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rat Poly::operator()(const Rat& x) const {
    // mpq_class(a, b) does not reduce; arithmetic on unreduced input is wrong
    Rat y = x;
    y.canonicalize();
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Rat inv = 1 / lead();
    return *this * inv;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Poly out;
    out.coeffs_ = std::move(v);
    out.trim();
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {Poly{}, a};
    std::vector<Rat> quo(static_cast<std::size_t>(da - db + 1));
    const Rat inv = 1 / b.lead();
    for (int k = da - db; k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + db)] * inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly compose(const Poly& f, const Poly& g) {
    Poly acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= g;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly compose_chain(std::span<const Poly> factors) {
    Poly acc = Poly::identity();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(*it, acc);
    return acc;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
    if (f.degree() < 1) throw DegreeError("squarefree_decomposition of a constant");
    // Yun's algorithm.
    std::vector<std::pair<Poly, unsigned>> out;
    Poly fm = f.monic();
    Poly d = fm.derivative();
    Poly a = gcd(fm, d);
    Poly b = divmod(fm, a).quotient;
    Poly c = divmod(d, a).quotient;
    Poly bp = b.derivative();
    Poly e = c - bp;
    for (unsigned i = 1; b.degree() > 0; ++i) {
        Poly g = gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divmod(b, g).quotient;
        c = divmod(e, g).quotient;
        e = c - b.derivative();
    }
    return out;
}

std::vector<Rat> rational_roots(const Poly& f) {
    if (f.degree() < 1) return {};
    std::vector<Rat> roots;
    // Strip the root at zero, then clear denominators.
    int low = 0;
    while (f.coeff(low) == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<Rat> shifted(f.coeffs().begin() + low, f.coeffs().end());
    if (shifted.size() > 1) {
        mpz_class lcm = 1;
        for (const auto& c : shifted) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        Poly g(shifted);
        g *= Rat(lcm);
        const mpz_class a0 = g.coeff(0).get_num();
        const mpz_class an = g.lead().get_num();
        for (const auto& p : positive_divisors(a0)) {
            for (const auto& q : positive_divisors(an)) {
                for (int sign : {1, -1}) {
                    Rat cand(p * sign, q);
                    cand.canonicalize();
                    if (g(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<PowerForm> power_form(const Poly& f) {
    const int k = f.degree();
    if (k < 1) return std::nullopt;
    const Rat center = -f.coeff(k - 1) / (f.lead() * k);
    const Rat offset = f(center);
    const Poly candidate = compose(Poly::monomial(f.lead(), static_cast<unsigned>(k)), Poly::linear(1, -center)) +
                           Poly::constant(offset);
    if (candidate != f) return std::nullopt;
    return PowerForm{f.lead(), center, offset};
}

Poly chebyshev(unsigned n) {
    Poly prev = Poly::constant(1);
    if (n == 0) return prev;
    Poly cur = Poly::identity();
    const Poly two_z = Poly::monomial(2, 1);
    for (unsigned k = 1; k < n; ++k) {
        Poly next = two_z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rat mag = abs(c);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << "*";
        os << "z";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).quotient;
        den_ = divmod(den_, g).quotient;
    }
    const Rat inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
}

int RatFunc::degree() const noexcept {
    if (num_.is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
}

std::optional<Poly> RatFunc::as_poly() const {
    if (!is_polynomial()) return std::nullopt;
    return num_;
}

std::optional<Rat> RatFunc::operator()(const Rat& x) const {
    Rat d = den_(x);
    if (d == 0) return std::nullopt;
    return Rat(num_(x) / d);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw ZeroDenominator("division by the zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}
RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

RatFunc substitute(const RatFunc& f, const RatFunc& g) {
    // F = N/D of degree d, G = a/b: F(G) = sum N_i a^i b^{d-i} / sum D_i a^i b^{d-i}.
    const int d = std::max(f.num().degree(), f.den().degree());
    if (d <= 0) return f;
    std::vector<Poly> apow{Poly::constant(1)}, bpow{Poly::constant(1)};
    for (int i = 1; i <= d; ++i) {
        apow.push_back(apow.back() * g.num());
        bpow.push_back(bpow.back() * g.den());
    }
    Poly num, den;
    for (int i = 0; i <= d; ++i) {
        const Poly mono = apow[static_cast<std::size_t>(i)] * bpow[static_cast<std::size_t>(d - i)];
        if (f.num().coeff(i) != 0) num += mono * f.num().coeff(i);
        if (f.den().coeff(i) != 0) den += mono * f.den().coeff(i);
    }
    return RatFunc(std::move(num), std::move(den));
}

RatFunc compose(const RatFunc& f, const RatFunc& g) {
    if (f.is_constant() || g.is_constant()) throw ConstantInput("composition requires non-constant maps");
    return substitute(f, g);
}

RatFunc compose_chain(std::span<const RatFunc> factors) {
    RatFunc acc = RatFunc::identity();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(*it, acc);
    return acc;
}

std::string to_string(const RatFunc& r) {
    if (r.is_polynomial()) return to_string(r.num());
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

// ---------------------------------------------------------------- Moebius

Moebius::Moebius(Rat a, Rat b, Rat c, Rat d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ == 0) throw DomainError("degenerate Moebius map (ad - bc = 0)");
    mpz_class lcm = 1, g = 0;
    for (const Rat* x : {&a_, &b_, &c_, &d_}) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x->get_den().get_mpz_t());
    for (Rat* x : {&a_, &b_, &c_, &d_}) {
        *x *= Rat(lcm);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->get_num().get_mpz_t());
    }
    Rat scale(1, g);
    scale.canonicalize();
    for (const Rat* x : {&a_, &b_, &c_, &d_}) {
        if (*x != 0) {
            if (*x < 0) scale = -scale;
            break;
        }
    }
    for (Rat* x : {&a_, &b_, &c_, &d_}) *x *= scale;
}

Moebius Moebius::from_ratfunc(const RatFunc& r) {
    if (r.degree() != 1) throw DegreeError("Moebius map needs a degree-1 rational function");
    return Moebius(r.num().coeff(1), r.num().coeff(0), r.den().coeff(1), r.den().coeff(0));
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

RatFunc Moebius::as_ratfunc() const { return RatFunc(Poly::linear(a_, b_), Poly::linear(c_, d_)); }

Poly Moebius::as_poly() const {
    if (!is_affine()) throw DomainError("Moebius map is not affine");
    return Poly::linear(a_ / d_, b_ / d_);
}

Moebius operator*(const Moebius& x, const Moebius& y) {
    return Moebius(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                   x.c_ * y.b_ + x.d_ * y.d_);
}

std::string to_string(const Moebius& m) { return to_string(m.as_ratfunc()); }

RatFunc conjugate(const RatFunc& r, const Moebius& mu) {
    if (r.is_constant()) throw ConstantInput("conjugate of a constant");
    return compose(mu.inverse().as_ratfunc(), compose(r, mu.as_ratfunc()));
}

Poly conjugate(const Poly& f, const Moebius& affine) {
    return compose(affine.inverse().as_poly(), compose(f, affine.as_poly()));
}

}  // namespace ritt
