#include "ritt/characters.hpp"

#include <set>

#include "ritt/decompose.hpp"
#include "ritt/errors.hpp"
#include "ritt/integer.hpp"
#include "ritt/ramify.hpp"

namespace ritt {

CharValue::CharValue(Rat q_, long m_) : q(std::move(q_)), m(q == 0 ? 0 : m_) {}

CharValue operator*(const CharValue& a, const CharValue& b) { return CharValue(a.q * b.q, a.m + b.m); }

CharValue operator/(const CharValue& a, const CharValue& b) {
    if (b.q == 0) throw DomainError("character value division by zero");
    return CharValue(a.q / b.q, a.m - b.m);
}

std::string to_string(const CharValue& v) {
    if (v.q == 0) return "0";
    if (v.m == 0) return to_string(v.q);
    const std::string e = "e^" + std::to_string(v.m);
    if (v.q == 1) return e;
    return to_string(v.q) + "*" + e;
}

CharValue PrimeWeights::at(const Poly& prime) const {
    auto it = table.find(to_string(prime));
    return it == table.end() ? unlisted : it->second;
}

Character Character::degree() { return {kind::Elementary{{}, kind::Elementary::Unlisted::Degree}}; }

Character Character::elementary(std::map<unsigned, CharValue> prime_values, kind::Elementary::Unlisted unlisted) {
    for (const auto& [p, _] : prime_values)
        if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0)
            throw PreconditionError("elementary character keyed by a non-prime " + std::to_string(p));
    return {kind::Elementary{std::move(prime_values), unlisted}};
}

Character Character::power_class(unsigned p) {
    if (p < 3 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0)
        throw PreconditionError("power class character needs a prime p >= 3");
    return {kind::PowerClass{p}};
}

Character Character::product(Character a, Character b) {
    return {kind::Product{std::make_shared<const Character>(std::move(a)),
                          std::make_shared<const Character>(std::move(b))}};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

CharValue elementary_at(const kind::Elementary& e, unsigned n) {
    CharValue out;
    for (const auto& [p, k] : factorize(mpz_class(n))) {
        const unsigned prime = static_cast<unsigned>(p.get_ui());
        CharValue v;
        if (auto it = e.prime_values.find(prime); it != e.prime_values.end()) {
            v = it->second;
        } else {
            switch (e.unlisted) {
                case kind::Elementary::Unlisted::Degree: v = CharValue(prime); break;
                case kind::Elementary::Unlisted::One: v = CharValue(1); break;
                case kind::Elementary::Unlisted::Reject:
                    throw DomainError("elementary character has no value at prime " + std::to_string(prime));
            }
        }
        for (unsigned i = 0; i < k; ++i) out = out * v;
    }
    return out;
}

}  // namespace

std::string to_string(const Character& c) {
    return std::visit(overloaded{
                          [](const kind::Elementary& e) -> std::string {
                              if (e.prime_values.empty() && e.unlisted == kind::Elementary::Unlisted::Degree)
                                  return "deg";
                              std::string s = "Elementary(";
                              bool first = true;
                              for (const auto& [p, v] : e.prime_values) {
                                  s += (first ? "" : ", ") + std::to_string(p) + "->" + to_string(v);
                                  first = false;
                              }
                              return s + ")";
                          },
                          [](const kind::Length&) -> std::string { return "Length"; },
                          [](const kind::PowerClass& k) { return "PowerClass(" + std::to_string(k.p) + ")"; },
                          [](const kind::DegreeFour&) -> std::string { return "DegreeFour"; },
                          [](const kind::PrimeWeight&) -> std::string { return "PrimeWeight"; },
                          [](const kind::AffineLeading&) -> std::string { return "AffineLeading"; },
                          [](const kind::Product& k) {
                              return "Product(" + to_string(*k.left) + ", " + to_string(*k.right) + ")";
                          },
                      },
                      c.kind);
}

CharValue char_eval(const Character& c, const Poly& f) {
    const int d = f.degree();
    if (d <= 0) return CharValue::zero();
    if (auto* prod = std::get_if<kind::Product>(&c.kind)) return char_eval(*prod->left, f) * char_eval(*prod->right, f);
    if (std::holds_alternative<kind::AffineLeading>(c.kind)) {
        if (d != 1) throw DomainError("AffineLeading is defined on affine maps only");
        return CharValue(f.lead());
    }
    if (auto* e = std::get_if<kind::Elementary>(&c.kind)) return elementary_at(*e, static_cast<unsigned>(d));
    if (auto* w = std::get_if<kind::PrimeWeight>(&c.kind); w && !w->validated)
        throw UnvalidatedWeights("prime weights have not passed validation");
    if (d == 1) return CharValue(1);

    const Decomposition dec = prime_decomposition(f);
    return std::visit(overloaded{
                          [&](const kind::Length&) { return CharValue::e_power(static_cast<long>(dec.length())); },
                          [&](const kind::PowerClass& k) {
                              CharValue out;
                              for (const auto& g : dec.factors)
                                  if (hurwitz_power_class(g, k.p)) out = out * CharValue(k.p);
                              return out;
                          },
                          [&](const kind::DegreeFour&) {
                              CharValue out;
                              for (const auto& g : dec.factors)
                                  if (g.degree() == 4 && !hurwitz_power_class(g, 4)) out = out * CharValue(4);
                              return out;
                          },
                          [&](const kind::PrimeWeight& w) {
                              CharValue out;
                              for (const auto& g : dec.factors) out = out * w.weights.at(g);
                              return out;
                          },
                          [](const auto&) -> CharValue { throw ConsistencyFailure("unreachable character kind"); },
                      },
                      c.kind);
}

WeightReport validate_prime_weight(const PrimeWeights& weights, const std::vector<Quadruple>& sample) {
    WeightReport rep;
    // Condition (i): the table may not give a constant a nonzero value.
    for (const auto& [key, v] : weights.table) {
        if (key.find('z') == std::string::npos && !(v == CharValue::zero())) {
            rep.constants_to_zero = false;
            rep.details.push_back("constant " + key + " weighted " + to_string(v));
        }
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto& s = sample[i];
        if (!(compose(s.p1, s.p2) == compose(s.p3, s.p4)))
            throw PreconditionError("quadruple " + std::to_string(i) + " does not satisfy P1 o P2 = P3 o P4");
        const CharValue lhs = weights.at(s.p1) * weights.at(s.p2);
        const CharValue rhs = weights.at(s.p3) * weights.at(s.p4);
        if (!(lhs == rhs)) {
            rep.violations.push_back(i);
            rep.details.push_back("instance " + std::to_string(i) + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
    }
    return rep;
}

Character prime_weight_character(const PrimeWeights& weights, const WeightReport& report) {
    if (!report.valid()) throw UnvalidatedWeights("prime weights failed validation");
    return {kind::PrimeWeight{weights, true}};
}

std::vector<MultiplicativityFailure> multiplicativity_audit(const Character& c,
                                                            const std::vector<std::pair<Poly, Poly>>& pairs) {
    std::vector<MultiplicativityFailure> out;
    for (const auto& [f, g] : pairs) {
        const CharValue composed = char_eval(c, compose(f, g));
        const CharValue product = char_eval(c, f) * char_eval(c, g);
        if (!(composed == product)) out.push_back({f, g, composed, product});
    }
    return out;
}

std::vector<Check> restrictions_audit(const RationalCharacter& c, unsigned nmax) {
    if (nmax < 2) throw PreconditionError("restrictions_audit: nmax must be at least 2");
    std::vector<Check> out;
    auto show = [](const std::optional<CharValue>& v) { return v ? to_string(*v) : std::string("undefined"); };

    {
        Check ck{"constants map to 0", true, ""};
        for (int k : {0, 1, -2}) {
            const auto v = c(RatFunc(Poly::constant(k)));
            if (v && !(*v == CharValue::zero())) {
                ck.pass = false;
                ck.detail += "phi(" + std::to_string(k) + ") = " + to_string(*v) + "; ";
            }
        }
        if (ck.pass) ck.detail = "phi(0), phi(1), phi(-2) are 0 where defined";
        out.push_back(ck);
    }
    {
        Check ck{"affine maps map to 1", true, ""};
        const Poly sample[] = {Poly::identity(), Poly::linear(-1, 0), Poly::linear(2, 1), Poly::linear(Rat(1, 3), -5),
                               Poly::linear(-7, 2)};
        for (const auto& a : sample) {
            const auto v = c(RatFunc(a));
            if (v && !(*v == CharValue(1))) {
                ck.pass = false;
                ck.detail += "phi(" + to_string(a) + ") = " + to_string(*v) + "; ";
            }
        }
        if (ck.pass) ck.detail = "five affine maps evaluate to 1 where defined";
        out.push_back(ck);
    }
    const auto at_minus = c(RatFunc(Poly::linear(-1, 0)));
    for (unsigned n = 2; n <= nmax; n += 2) {
        // z^n o (-z) = z^n forces phi(z^n) = 0 whenever phi(-z) != 1.
        const auto at_power = c(RatFunc(Poly::monomial(1, n)));
        Check ck{"phi(-z) != 1 implies phi(z^" + std::to_string(n) + ") = 0", true, ""};
        if (at_minus && at_power)
            ck.pass = *at_minus == CharValue(1) || *at_power == CharValue::zero();
        ck.detail = "phi(-z) = " + show(at_minus) + ", phi(z^" + std::to_string(n) + ") = " + show(at_power);
        out.push_back(ck);
    }
    {
        const auto v = c(RatFunc(Poly::constant(1), Poly::identity()));
        Check ck{"phi(1/z)^2 = 1", true, ""};
        if (v) {
            ck.pass = *v * *v == CharValue(1);
            ck.detail = "phi(1/z) = " + to_string(*v);
        } else {
            ck.detail = "not defined on non-polynomial maps";
        }
        out.push_back(ck);
    }
    return out;
}

std::vector<Check> restrictions_audit(const Character& c, unsigned nmax) {
    return restrictions_audit(
        [&c](const RatFunc& r) -> std::optional<CharValue> {
            const auto p = r.as_poly();
            if (!p) return std::nullopt;
            try {
                return char_eval(c, *p);
            } catch (const DomainError&) {
                return std::nullopt;
            }
        },
        nmax);
}

std::map<std::string, std::vector<std::string>> Graduation::fibers() const {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [elem, key] : fiber_of) out[key].push_back(elem);
    return out;
}

Graduation graduation_of(const Character& c, const std::vector<Poly>& sample) {
    if (sample.empty()) throw PreconditionError("graduation_of: empty sample");
    Graduation g;
    for (const auto& f : sample) g.fiber_of[to_string(f)] = to_string(char_eval(c, f));
    return g;
}

namespace {
void require_same_sample(const Graduation& a, const Graduation& b) {
    if (a.fiber_of.size() != b.fiber_of.size())
        throw SampleMismatch("graduations are over different samples");
    for (auto ia = a.fiber_of.begin(), ib = b.fiber_of.begin(); ia != a.fiber_of.end(); ++ia, ++ib)
        if (ia->first != ib->first) throw SampleMismatch("graduations are over different samples");
}
}  // namespace

bool graduation_subordinate(const Graduation& a, const Graduation& b) {
    require_same_sample(a, b);
    std::map<std::string, std::string> image;  // fibre of a -> fibre of b
    for (const auto& [elem, ka] : a.fiber_of) {
        const std::string& kb = b.fiber_of.at(elem);
        auto [it, fresh] = image.emplace(ka, kb);
        if (!fresh && it->second != kb) return false;
    }
    return true;
}

Graduation common_refinement(const Graduation& a, const Graduation& b) {
    require_same_sample(a, b);
    Graduation g;
    for (const auto& [elem, ka] : a.fiber_of) g.fiber_of[elem] = ka + " | " + b.fiber_of.at(elem);
    return g;
}

bool is_elementary_on_sample(const Character& c, const std::vector<Poly>& sample) {
    if (sample.empty()) throw PreconditionError("is_elementary_on_sample: empty sample");
    std::map<int, CharValue> seen;
    for (const auto& f : sample) {
        const CharValue v = char_eval(c, f);
        auto [it, fresh] = seen.emplace(f.degree(), v);
        if (!fresh && !(it->second == v)) return false;
    }
    return true;
}

FeasibilityReport cyclic_feasibility(unsigned i, unsigned j, unsigned kmax) {
    if (i < 2 || i >= j) throw PreconditionError("cyclic_feasibility: need 2 <= i < j");
    if (kmax < 2) throw PreconditionError("cyclic_feasibility: kmax must be at least 2");
    FeasibilityReport rep{i, j, kmax, {}, true, ""};
    for (unsigned k = 2; k <= kmax; ++k)
        for (unsigned q = 0; q <= i; ++q)
            for (unsigned n = 0; n <= j; ++n) {
                const unsigned p = i - q, m = j - n;
                if (p + q * k != m + n * k) continue;
                rep.solutions.push_back({p, q, m, n, k});
                const long lhs = (static_cast<long>(q) - static_cast<long>(n)) * (static_cast<long>(k) - 1);
                if (lhs != static_cast<long>(j) - static_cast<long>(i)) rep.relation_holds = false;
            }
    rep.note =
        "the constraints force (q - n)(k - 1) = j - i; the form (k - 1) = (j - i)/(n - q) has the opposite sign";
    return rep;
}

}  // namespace ritt
