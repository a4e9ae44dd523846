#pragma once

// Multiplicative characters on the polynomial composition semigroup, valued
// in the formal monoid q * e^m, with audits, graduations and the cyclic
// feasibility solver.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ritt/algebra.hpp"
#include "ritt/report.hpp"

namespace ritt {

/// q * e^m. Zero is (0, 0).
struct CharValue {
    Rat q = 1;
    long m = 0;

    CharValue() = default;
    CharValue(Rat q_, long m_ = 0);

    static CharValue zero() { return CharValue(0); }
    static CharValue e_power(long m) { return CharValue(1, m); }

    friend CharValue operator*(const CharValue& a, const CharValue& b);
    /// Throws DomainError when b is zero.
    friend CharValue operator/(const CharValue& a, const CharValue& b);
    friend bool operator==(const CharValue& a, const CharValue& b) { return a.q == b.q && a.m == b.m; }
};

/// "0", "4", "e^3", "4*e^2", "-1/2*e^-1".
std::string to_string(const CharValue& v);

struct Character;
using CharacterPtr = std::shared_ptr<const Character>;

/// Prime-indexed table over exact polynomial text. Lookups are exact: two
/// affinely twisted copies of one prime are different keys, which is what
/// validation is for.
struct PrimeWeights {
    std::map<std::string, CharValue> table;  // to_string(prime) -> value
    CharValue unlisted{1};

    void set(const Poly& prime, const CharValue& v) { table[to_string(prime)] = v; }
    CharValue at(const Poly& prime) const;
};

namespace kind {
/// Completely multiplicative function of the degree given on primes.
struct Elementary {
    enum class Unlisted { Degree, One, Reject };
    std::map<unsigned, CharValue> prime_values;
    Unlisted unlisted = Unlisted::Degree;
};
struct Length {};
struct PowerClass {
    unsigned p;
};
struct DegreeFour {};
struct PrimeWeight {
    PrimeWeights weights;
    bool validated = false;
};
struct AffineLeading {};
struct Product {
    CharacterPtr left, right;
};
}  // namespace kind

struct Character {
    std::variant<kind::Elementary, kind::Length, kind::PowerClass, kind::DegreeFour, kind::PrimeWeight,
                 kind::AffineLeading, kind::Product>
        kind;

    /// Elementary character deg.
    static Character degree();
    static Character elementary(std::map<unsigned, CharValue> prime_values,
                                kind::Elementary::Unlisted unlisted = kind::Elementary::Unlisted::One);
    static Character length() { return {kind::Length{}}; }
    /// p prime, p >= 3; PreconditionError otherwise.
    static Character power_class(unsigned p);
    static Character degree_four() { return {kind::DegreeFour{}}; }
    static Character affine_leading() { return {kind::AffineLeading{}}; }
    static Character product(Character a, Character b);
};

std::string to_string(const Character& c);

/// Constants evaluate to 0. Degree-1 maps evaluate to 1 except for
/// AffineLeading (the slope). Length, PowerClass, DegreeFour and PrimeWeight
/// are evaluated along one prime decomposition:
///   Length      e^l
///   PowerClass  p per prime factor in H(z^p)
///   DegreeFour  4 per prime factor of degree 4
///   PrimeWeight product of table weights
/// Throws DomainError (AffineLeading on degree >= 2, rejected prime in an
/// Elementary degree) and UnvalidatedWeights.
CharValue char_eval(const Character& c, const Poly& f);

// ------------------------------------------------------------------ reports

/// Instance (P1, P2, P3, P4) of P1 o P2 = P3 o P4.
struct Quadruple {
    Poly p1, p2, p3, p4;
};

struct WeightReport {
    bool constants_to_zero = true;          // condition (i)
    std::vector<std::size_t> violations;    // indices into the sample, condition (ii)
    std::vector<std::string> details;
    bool valid() const noexcept { return constants_to_zero && violations.empty(); }
};

/// Throws PreconditionError when a quadruple does not compose to one value.
WeightReport validate_prime_weight(const PrimeWeights& weights, const std::vector<Quadruple>& sample);

/// Wraps validated weights; throws UnvalidatedWeights if the report failed.
Character prime_weight_character(const PrimeWeights& weights, const WeightReport& report);

struct MultiplicativityFailure {
    Poly f, g;
    CharValue composed, product;
};
std::vector<MultiplicativityFailure> multiplicativity_audit(const Character& c,
                                                            const std::vector<std::pair<Poly, Poly>>& pairs);

/// Partial character on rational maps (nullopt where undefined).
using RationalCharacter = std::function<std::optional<CharValue>(const RatFunc&)>;

/// Restriction checks: constants to 0, affine maps to 1, the alpha = -1
/// implication for even n <= nmax, and phi(1/z)^2 = 1 where defined.
std::vector<Check> restrictions_audit(const RationalCharacter& c, unsigned nmax);
std::vector<Check> restrictions_audit(const Character& c, unsigned nmax);

// -------------------------------------------------------------- graduations

struct Graduation {
    std::map<std::string, std::string> fiber_of;  // element text -> fiber key

    std::map<std::string, std::vector<std::string>> fibers() const;
};

/// Throws PreconditionError for an empty sample.
Graduation graduation_of(const Character& c, const std::vector<Poly>& sample);
/// Every fibre of a inside a fibre of b. SampleMismatch unless same sample.
bool graduation_subordinate(const Graduation& a, const Graduation& b);
Graduation common_refinement(const Graduation& a, const Graduation& b);

bool is_elementary_on_sample(const Character& c, const std::vector<Poly>& sample);

// ---------------------------------------------------------- cyclic solver

struct FeasibilitySolution {
    unsigned p, q, m, n, k;
    friend bool operator==(const FeasibilitySolution&, const FeasibilitySolution&) = default;
};

struct FeasibilityReport {
    unsigned i, j, kmax;
    std::vector<FeasibilitySolution> solutions;  // ordered by (k, q, n)
    bool relation_holds = true;                  // (q - n)(k - 1) = j - i on every solution
    std::string note;
};

/// All (p, q, m, n, k) with p + q = i, m + n = j, p + qk = m + nk, 2 <= k <= kmax.
/// PreconditionError unless 2 <= i < j and kmax >= 2.
FeasibilityReport cyclic_feasibility(unsigned i, unsigned j, unsigned kmax);

}  // namespace ritt
