#pragma once

// Exact arithmetic over Q: scalars, dense polynomials, reduced rational
// functions and Moebius maps, together with their composition laws.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ritt {

using Rat = mpq_class;

/// "p/q" in lowest terms, integers without a denominator.
std::string to_string(const Rat& r);

/// Dense univariate polynomial, coefficient i multiplies z^i.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    static Poly constant(const Rat& c);
    static Poly identity();
    static Poly monomial(const Rat& c, unsigned k);
    /// a*z + b
    static Poly linear(const Rat& a, const Rat& b);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    Rat coeff(int i) const;
    const Rat& lead() const;

    Rat operator()(const Rat& x) const;

    Poly derivative() const;
    Poly monic() const;
    Poly pow(unsigned e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rat> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws ZeroDenominator for a zero divisor.
DivMod divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// f(g(z)).
Poly compose(const Poly& f, const Poly& g);
/// factors[0] o factors[1] o ... ; identity for an empty list.
Poly compose_chain(std::span<const Poly> factors);

/// Square-free decomposition of a non-constant polynomial: pairs (s_i, i)
/// with s_i monic, square-free, pairwise coprime and f = lead * prod s_i^i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Rational roots of a polynomial (without multiplicity), ascending.
std::vector<Rat> rational_roots(const Poly& f);

/// f = scale * (z - center)^k + offset with k = deg f >= 1.
struct PowerForm {
    Rat scale;
    Rat center;
    Rat offset;
};
/// The form above when f has a single critical point of full multiplicity.
std::optional<PowerForm> power_form(const Poly& f);

/// First-kind Chebyshev polynomial, T_0 = 1, T_1 = z, T_{n+1} = 2z T_n - T_{n-1}.
Poly chebyshev(unsigned n);

/// Dense, decreasing degree, explicit signs, e.g. "4*z^3 - 3*z".
/// This is the canonical text encoding used for deduplication.
std::string to_string(const Poly& p);

/// Reduced quotient num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(1)) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}  // NOLINT: implicit by design of Pol < Rat
    RatFunc(Poly num, Poly den);

    static RatFunc identity() { return RatFunc(Poly::identity()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    /// max(deg num, deg den); 0 for constants.
    int degree() const noexcept;
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    bool is_constant() const noexcept { return degree() <= 0; }
    std::optional<Poly> as_poly() const;

    /// nullopt at a pole.
    std::optional<Rat> operator()(const Rat& x) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Poly num_;
    Poly den_;
};

/// F(G(z)); throws ConstantInput when either side is constant.
RatFunc compose(const RatFunc& f, const RatFunc& g);
/// Substitution without the non-constant precondition (constants allowed
/// on either side); throws ZeroDenominator if G hits a pole of F everywhere.
RatFunc substitute(const RatFunc& f, const RatFunc& g);
RatFunc compose_chain(std::span<const RatFunc> factors);

/// "(num)/(den)" or the polynomial text when den = 1.
std::string to_string(const RatFunc& r);

/// z -> (a z + b) / (c z + d), ad - bc != 0, scaled to coprime integers with
/// the first nonzero entry positive.
class Moebius {
public:
    Moebius(Rat a, Rat b, Rat c, Rat d);

    static Moebius identity() { return Moebius(1, 0, 0, 1); }
    static Moebius affine(const Rat& a, const Rat& b) { return Moebius(a, b, 0, 1); }
    static Moebius inversion() { return Moebius(0, 1, 1, 0); }
    /// Degree-1 rational function to map; throws DegreeError otherwise.
    static Moebius from_ratfunc(const RatFunc& r);

    const Rat& a() const noexcept { return a_; }
    const Rat& b() const noexcept { return b_; }
    const Rat& c() const noexcept { return c_; }
    const Rat& d() const noexcept { return d_; }

    bool is_affine() const noexcept { return c_ == 0; }
    Moebius inverse() const;
    RatFunc as_ratfunc() const;
    /// Affine maps as a linear polynomial; throws DomainError otherwise.
    Poly as_poly() const;

    friend Moebius operator*(const Moebius& outer, const Moebius& inner);  // outer o inner
    friend bool operator==(const Moebius& x, const Moebius& y) = default;

private:
    Rat a_, b_, c_, d_;
};

std::string to_string(const Moebius& m);

/// mu^{-1} o R o mu.
RatFunc conjugate(const RatFunc& r, const Moebius& mu);
/// Polynomial conjugation by an affine map.
Poly conjugate(const Poly& f, const Moebius& affine);

}  // namespace ritt
