#include "ritt/extension.hpp"

#include <charconv>

#include "ritt/catalog.hpp"
#include "ritt/decompose.hpp"
#include "ritt/errors.hpp"
#include "ritt/integer.hpp"
#include "ritt/ramify.hpp"

namespace ritt {

namespace {

bool prime_number(long n) { return n >= 2 && mpz_probab_prime_p(mpz_class(n).get_mpz_t(), 25) > 0; }

// Common values of verified catalog identities, with their chain lengths.
struct KnownIdentity {
    RatFunc value;
    std::vector<std::size_t> lengths;
};

const std::vector<KnownIdentity>& known_identities() {
    static const std::vector<KnownIdentity> ids = [] {
        std::vector<KnownIdentity> out;
        for (const auto& name : fixture_names()) {
            const FixtureRecord rec = fixture(name);
            const FixtureReport rep = verify_fixture(name);
            if (rec.chains.size() < 2 || !rep.value) continue;
            std::vector<std::size_t> lengths;
            for (const auto& ch : rec.chains) lengths.push_back(ch.size());
            out.push_back({*rep.value, lengths});
        }
        return out;
    }();
    return ids;
}

std::string chain_text(const std::vector<RatFunc>& chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? " . (" : "(") + to_string(chain[i]) + ")";
    return s;
}

}  // namespace

IdealPredicate decomposable_ideal() {
    return {"I_D", [](const RatFunc& r) {
                const int d = r.degree();
                if (d <= 1 || prime_number(d)) return Membership::No;
                if (auto p = r.as_poly()) return is_prime(*p) ? Membership::No : Membership::Yes;
                for (const auto& k : known_identities())
                    if (k.value == r) return Membership::Yes;
                return Membership::Unknown;
            }};
}

IdealPredicate ritt_ideal() {
    return {"I_R", [](const RatFunc& r) {
                const int d = r.degree();
                if (d <= 1 || prime_number(d) || r.is_polynomial()) return Membership::No;
                for (const auto& k : known_identities()) {
                    if (!(k.value == r)) continue;
                    for (std::size_t len : k.lengths)
                        if (len != k.lengths.front()) return Membership::Yes;
                }
                return Membership::Unknown;
            }};
}

PolyCharacter as_poly_character(const Character& c) {
    return [c](const Poly& f) { return char_eval(c, f); };
}

namespace {

Membership decide(const IdealPredicate& ideal, const Poly& f) {
    const Membership m = ideal.contains(RatFunc(f));
    if (m == Membership::Unknown)
        throw UndecidedMembership("membership of " + to_string(f) + " in " + ideal.name + " is undecided");
    return m;
}

void require_in(const IdealPredicate& ideal, const Poly& f, bool expected) {
    if ((decide(ideal, f) == Membership::Yes) != expected)
        throw PreconditionError(to_string(f) + (expected ? " is not in " : " is already in ") + ideal.name);
}

}  // namespace

ExtensionResult extend_over_ideal(const PolyCharacter& phi, const IdealPredicate& ideal, const Poly& r,
                                  const std::vector<Poly>& witnesses) {
    if (witnesses.empty()) throw PreconditionError("extend_over_ideal: no witnesses");
    require_in(ideal, r, false);
    ExtensionResult out;
    for (const auto& q : witnesses) {
        require_in(ideal, q, true);
        const CharValue at_q = phi(q);
        if (at_q == CharValue::zero()) throw ZeroWitness("character vanishes at witness " + to_string(q));
        const Poly rq = compose(r, q), qr = compose(q, r);
        require_in(ideal, rq, true);
        require_in(ideal, qr, true);
        WitnessEvaluation w{q, phi(rq) / at_q, phi(qr) / at_q};
        if (!(w.left == w.right))
            throw WitnessDisagreement("witness " + to_string(q) + ": phi(R o Q)/phi(Q) = " + to_string(w.right) +
                                      " but phi(Q o R)/phi(Q) = " + to_string(w.left));
        if (!out.audit.empty() && !(w.right == out.value))
            throw WitnessDisagreement("witness " + to_string(q) + " gives " + to_string(w.right) + ", witness " +
                                      to_string(out.audit.front().witness) + " gives " + to_string(out.value));
        if (out.audit.empty()) out.value = w.right;
        out.audit.push_back(std::move(w));
    }
    return out;
}

CharValue extend_by_square(const PolyCharacter& phi, const IdealPredicate& ideal, const Poly& r) {
    require_in(ideal, r, false);
    const Poly r2 = compose(r, r);
    require_in(ideal, r2, true);
    const Poly r3 = compose(r2, r);
    const CharValue v2 = phi(r2), v3 = phi(r3);
    if (v2 == CharValue::zero()) throw ZeroDenominator("character vanishes at R o R");
    // R^6 = R^2 o R^2 o R^2 = R^3 o R^3
    if (!(v2 * v2 * v2 == v3 * v3))
        throw ConsistencyFailure("phi(R^2)^3 = " + to_string(v2 * v2 * v2) + " but phi(R^3)^2 = " + to_string(v3 * v3));
    return v3 / v2;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Contradiction: return "contradiction";
        case Verdict::NoContradiction: return "no-contradiction";
        case Verdict::FixtureUnverified: return "fixture-unverified";
    }
    return "?";
}

namespace {

ObstructionReport length_bergweiler() {
    const FixtureRecord rec = fixture("bergweiler");
    const FixtureReport fx = verify_fixture("bergweiler");
    ObstructionReport rep;
    rep.id = "length-bergweiler";
    rep.identity = chain_text(rec.chains[0]) + " = " + chain_text(rec.chains[1]);
    rep.identity_verified = fx.value.has_value();
    rep.checks = fx.checks;
    rep.left = CharValue::e_power(static_cast<long>(rec.chains[0].size()));
    rep.right = CharValue::e_power(static_cast<long>(rec.chains[1].size()));
    rep.steps = {
        "compose both chains exactly: " + std::string(rep.identity_verified ? "equal" : "different"),
        "factors of degree 2 and 3 are prime by degree; the degree-4 factor is taken as prime without certification",
        "an extension of L = e^l must give e^" + std::to_string(rec.chains[0].size()) + " along the first chain and e^" +
            std::to_string(rec.chains[1].size()) + " along the second",
    };
    if (!rep.identity_verified)
        rep.verdict = Verdict::FixtureUnverified;
    else
        rep.verdict = rep.left == rep.right ? Verdict::NoContradiction : Verdict::Contradiction;
    return rep;
}

ObstructionReport phi1_chebyshev(unsigned p) {
    const std::string name = "chebyshev(" + std::to_string(p) + ")";
    const FixtureRecord rec = fixture(name);
    const FixtureReport fx = verify_fixture(name);
    const Character phi1 = Character::power_class(p);
    ObstructionReport rep;
    rep.id = "phi1-chebyshev(" + std::to_string(p) + ")";
    rep.identity = chain_text(rec.chains[0]) + " = " + chain_text(rec.chains[1]);
    rep.identity_verified = fx.value.has_value();
    rep.checks = fx.checks;
    const Poly tp = chebyshev(p), zp = Poly::monomial(1, p);
    rep.left = char_eval(phi1, tp);
    rep.right = char_eval(phi1, zp);
    rep.checks.push_back({"T_p is outside H(z^p)", !hurwitz_power_class(tp, p), "phi1(T_p) = " + to_string(rep.left)});
    rep.checks.push_back({"z^p is in H(z^p)", hurwitz_power_class(zp, p), "phi1(z^p) = " + to_string(rep.right)});
    const RatFunc y = rec.chains[0][1];
    const auto red = moebius_to_polynomial(y);
    const bool y_quadratic = red && red->poly.degree() == 2;
    rep.checks.push_back({"Y is Moebius-equivalent to a quadratic polynomial", y_quadratic,
                          red ? "reduces to " + to_string(red->poly) : "no reduction"});
    rep.steps = {
        "compose T_p o Y and Y o z^p exactly: " + std::string(rep.identity_verified ? "equal" : "different"),
        "multiplicativity gives phi1(T_p) * v = v * phi1(z^p) with v = phi1(Y)",
        to_string(rep.left) + " * v = v * " + to_string(rep.right) + " forces v = 0",
        "Y is non-constant of degree 2, hence in H(z^2) like every quadratic map, so v = 0 violates the restriction "
        "that only constants are sent to 0",
    };
    if (!rep.identity_verified)
        rep.verdict = Verdict::FixtureUnverified;
    else if (rep.left == rep.right || !y_quadratic)
        rep.verdict = Verdict::NoContradiction;
    else
        rep.verdict = Verdict::Contradiction;
    return rep;
}

// Polynomial factors use the character; rational factors of degree 1 or 2
// count 1; other rational factors take the value of their polynomial
// reduction.
CharValue phi2_factor(const RatFunc& f, std::string& note) {
    const Character phi2 = Character::degree_four();
    if (auto p = f.as_poly()) {
        note = "polynomial";
        return char_eval(phi2, *p);
    }
    if (f.degree() <= 2) {
        note = "rational of degree " + std::to_string(f.degree()) + ", valued 1";
        return CharValue(1);
    }
    const auto red = moebius_to_polynomial(f);
    if (!red) throw ConsistencyFailure("no polynomial reduction for " + to_string(f));
    note = "reduces to " + to_string(red->poly);
    return char_eval(phi2, red->poly);
}

CharValue phi2_chain(const std::vector<RatFunc>& chain, std::vector<std::string>& steps) {
    CharValue out;
    for (const auto& f : chain) {
        std::string note;
        const CharValue v = phi2_factor(f, note);
        steps.push_back("phi2(" + to_string(f) + ") = " + to_string(v) + " (" + note + ")");
        out = out * v;
    }
    return out;
}

ObstructionReport phi2_s4() {
    const FixtureRecord rec = fixture("s4");
    const FixtureReport fx = verify_fixture("s4");
    ObstructionReport rep;
    rep.id = "phi2-s4";
    rep.identity = chain_text(rec.chains[0]) + " = " + chain_text(rec.chains[1]);
    rep.identity_verified = fx.value.has_value();
    rep.checks = fx.checks;
    rep.steps.push_back("compose both chains exactly: " + std::string(rep.identity_verified ? "equal" : "different"));
    rep.steps.push_back(
        "valuation rule: polynomial factors by phi2, rational factors of degree <= 2 by 1, other rational factors by "
        "phi2 of their polynomial reduction");
    rep.left = phi2_chain(rec.chains[0], rep.steps);
    rep.right = phi2_chain(rec.chains[1], rep.steps);
    rep.steps.push_back("side products " + to_string(rep.left) + " and " + to_string(rep.right));

    auto alt = rec.chains[0];
    alt.back() = RatFunc(Poly::monomial(2, 2));
    const bool alt_equal = compose_chain(alt) == compose_chain(rec.chains[1]);
    std::vector<std::string> scratch;
    const CharValue alt_left = phi2_chain(alt, scratch);
    rep.checks.push_back({"with innermost factor 2*z^2 the sides agree and the products differ",
                          alt_equal && !(alt_left == rep.right),
                          "products " + to_string(alt_left) + " and " + to_string(rep.right), true});
    if (!rep.identity_verified)
        rep.verdict = Verdict::FixtureUnverified;
    else
        rep.verdict = rep.left == rep.right ? Verdict::NoContradiction : Verdict::Contradiction;
    return rep;
}

}  // namespace

ObstructionReport obstruction_report(const std::string& id) {
    if (id == "length-bergweiler") return length_bergweiler();
    if (id == "phi2-s4") return phi2_s4();
    const std::string head = "phi1-chebyshev(";
    if (id.size() > head.size() + 1 && id.compare(0, head.size(), head) == 0 && id.back() == ')') {
        unsigned p = 0;
        const char* last = id.data() + id.size() - 1;
        auto [ptr, ec] = std::from_chars(id.data() + head.size(), last, p);
        if (ec == std::errc() && ptr == last && p >= 3 && prime_number(p)) return phi1_chebyshev(p);
    }
    throw UnknownFixture("unknown obstruction '" + id + "'");
}

}  // namespace ritt
