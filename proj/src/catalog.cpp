#include "ritt/catalog.hpp"

#include <charconv>

#include "ritt/errors.hpp"
#include "ritt/normal_forms.hpp"
#include "ritt/ramify.hpp"

namespace ritt {

namespace {

const Poly z = Poly::identity();
Poly c(const Rat& v) { return Poly::constant(v); }
RatFunc frac(const Poly& n, const Poly& d) { return RatFunc(n, d); }
// (z + 1/z) / 2
RatFunc joukowski() { return frac(z * z + c(1), Poly::monomial(2, 1)); }

FixtureRecord bergweiler() {
    FixtureRecord r;
    r.name = "bergweiler";
    r.closed_form = [] {
        const RatFunc inner = frac(z.pow(4) - Poly::monomial(8, 1), z.pow(3) + Poly::monomial(2, 2) + Poly::monomial(2, 1) + c(1));
        return inner * inner * inner;
    }();
    r.chains = {
        {RatFunc(z.pow(3)), frac(z * z - c(4), z - c(1)), frac(z * z + c(2), z + c(1))},
        {frac(z * (z - c(8)).pow(3), (z + c(1)).pow(3)), RatFunc(z.pow(3))},
    };
    r.expected_lengths = {3, 2};
    r.expected_degree = 12;
    r.provenance = "rational map of degree 12 with prime decompositions of lengths 3 and 2";
    return r;
}

Poly s4_quartic() { return Poly::monomial(Rat(-256, 27), 3) * (z - c(1)); }
RatFunc s4_cubic_a() { return RatFunc(Poly(z - c(1)).pow(3) * Rat(1, 4), z * z + c(1)) + RatFunc(c(1)); }
RatFunc s4_cubic_b() { return frac((z + c(7)).pow(3) * Rat(1, 54), (z - c(1)).pow(2)); }

FixtureRecord s4() {
    FixtureRecord r;
    r.name = "s4";
    r.closed_form = [] {
        const Poly num = (Poly::monomial(16, 8) - Poly::monomial(56, 4) + c(1)).pow(3) * Rat(-1, 432);
        const Poly den = z.pow(4) * (Poly::monomial(4, 4) + c(1)).pow(4);
        return frac(num, den);
    }();
    r.chains = {
        {s4_cubic_b(), joukowski(), RatFunc(Poly::monomial(-1, 2)), RatFunc(z * z)},
        {RatFunc(s4_quartic()), s4_cubic_a(), frac(Poly::monomial(2, 2) - c(1), Poly::monomial(2, 1))},
    };
    r.expected_lengths = {4, 3};
    r.expected_degree = 24;
    r.provenance = "degree-24 map with monodromy group S4; chains of lengths 4 and 3 as printed";
    return r;
}

FixtureRecord chebyshev_fixture(unsigned p) {
    FixtureRecord r;
    r.name = "chebyshev(" + std::to_string(p) + ")";
    r.chains = {{RatFunc(chebyshev(p)), joukowski()}, {joukowski(), RatFunc(z.pow(p))}};
    r.expected_lengths = {2, 2};
    r.expected_degree = static_cast<int>(2 * p);
    r.provenance = "semiconjugacy T_p o Y = Y o z^p with Y = (z + 1/z)/2";
    return r;
}

RatFunc inv() { return frac(c(1), z); }

FixtureRecord moebius_chain_1() {
    using S = ReplayStep::Side;
    FixtureRecord r;
    r.name = "moebius-chain-1";
    r.start = s4_cubic_a();
    r.chains = {{*r.start}};
    r.expected_lengths = {1};
    r.expected_degree = 3;
    r.provenance = "reduction of the cubic factor of the length-3 chain to a polynomial";
    const Poly zp1 = z + c(1);
    r.steps = {
        {S::Post, RatFunc(Poly::linear(4, -4)), frac((z - c(1)).pow(3), z * z + c(1))},
        {S::Pre, RatFunc(zp1), frac(z.pow(3), zp1 * zp1 + c(1))},
        {S::Post, inv(), frac(zp1 * zp1 + c(1), z.pow(3))},
        {S::Pre, inv(), RatFunc(z * (zp1 * zp1 + z * z))},
    };
    return r;
}

FixtureRecord moebius_chain_2() {
    using S = ReplayStep::Side;
    FixtureRecord r;
    r.name = "moebius-chain-2";
    r.start = s4_cubic_b();
    r.chains = {{*r.start}};
    r.expected_lengths = {1};
    r.expected_degree = 3;
    r.provenance = "reduction of the cubic factor of the length-4 chain to a polynomial";
    r.steps = {
        {S::Post, RatFunc(Poly::monomial(54, 1)), frac((z + c(7)).pow(3), (z - c(1)).pow(2))},
        {S::Pre, RatFunc(Poly::linear(-1, 0)), frac((c(7) - z).pow(3), (z + c(1)).pow(2))},
        {S::Post, inv(), frac((z + c(1)).pow(2), (c(7) - z).pow(3))},
        {S::Pre, RatFunc(z + c(7)), frac((z + c(8)).pow(2), -z.pow(3))},
        {S::Pre, inv(), RatFunc(-(z * (c(1) + Poly::monomial(8, 1)).pow(2)))},
    };
    return r;
}

std::optional<unsigned> chebyshev_index(const std::string& name) {
    const std::string head = "chebyshev(";
    if (name.size() <= head.size() + 1 || name.compare(0, head.size(), head) != 0 || name.back() != ')')
        return std::nullopt;
    unsigned p = 0;
    const char* first = name.data() + head.size();
    const char* last = name.data() + name.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return p;
}

Check equality_check(std::string name, const RatFunc& a, const RatFunc& b, bool informational = false) {
    if (a == b) return {std::move(name), true, "exact equality", informational};
    return {std::move(name), false, "difference " + to_string(a - b), informational};
}

}  // namespace

FixtureRecord fixture(const std::string& name) {
    if (name == "bergweiler") return bergweiler();
    if (name == "s4") return s4();
    if (name == "moebius-chain-1") return moebius_chain_1();
    if (name == "moebius-chain-2") return moebius_chain_2();
    if (auto p = chebyshev_index(name); p && *p >= 2) return chebyshev_fixture(*p);
    throw UnknownFixture("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"bergweiler", "s4", "chebyshev(2)", "chebyshev(3)", "chebyshev(5)", "chebyshev(7)",
            "moebius-chain-1", "moebius-chain-2"};
}

bool FixtureReport::verified() const {
    for (const auto& ck : checks)
        if (!ck.informational && !ck.pass) return false;
    return true;
}

FixtureReport verify_fixture(const std::string& name) {
    const FixtureRecord rec = fixture(name);
    FixtureReport rep{rec.name, {}, std::nullopt};

    std::vector<RatFunc> values;
    for (std::size_t i = 0; i < rec.chains.size(); ++i) {
        const auto& chain = rec.chains[i];
        values.push_back(compose_chain(chain));
        const std::string tag = "chain " + std::to_string(i + 1);
        const bool len_ok = chain.size() == rec.expected_lengths.at(i);
        rep.checks.push_back({tag + " has length " + std::to_string(rec.expected_lengths[i]), len_ok,
                              "length " + std::to_string(chain.size())});
        if (rec.expected_degree) {
            const int deg = values.back().degree();
            rep.checks.push_back({tag + " composes to degree " + std::to_string(*rec.expected_degree),
                                  deg == *rec.expected_degree, "degree " + std::to_string(deg)});
        }
    }
    bool agree = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
        rep.checks.push_back(equality_check("chain 1 equals chain " + std::to_string(i + 1), values[0], values[i]));
        agree = agree && rep.checks.back().pass;
    }
    if (agree) rep.value = values.front();

    if (rec.closed_form) {
        const std::string label = rec.name == "s4" ? "printed closed form, read with (4z^4+1)^4," : "printed closed form";
        for (std::size_t i = 0; i < values.size(); ++i)
            rep.checks.push_back(equality_check(label + " equals chain " + std::to_string(i + 1), *rec.closed_form,
                                                values[i]));
    }

    // Alternative readings, reported but never decisive.
    if (rec.name == "bergweiler") {
        const RatFunc inner = frac(z.pow(4) - Poly::monomial(8, 1), z.pow(3) + c(1));
        rep.checks.push_back(equality_check("closed form with denominator (z^3 + 1)^3 equals chain 1",
                                            inner * inner * inner, values[0], true));
    }
    if (rec.name == "s4") {
        auto alt = rec.chains[0];
        alt.back() = RatFunc(Poly::monomial(2, 2));
        rep.checks.push_back(
            equality_check("chain 1 with innermost factor 2*z^2 equals chain 2", compose_chain(alt), values[1], true));
    }

    if (rec.start) {
        RatFunc cur = *rec.start;
        for (std::size_t i = 0; i < rec.steps.size(); ++i) {
            const auto& st = rec.steps[i];
            const bool post = st.side == ReplayStep::Side::Post;
            cur = post ? compose(st.map, cur) : compose(cur, st.map);
            rep.checks.push_back(equality_check("step " + std::to_string(i + 1) + " (" + (post ? "post " : "pre ") +
                                                    to_string(st.map) + ")",
                                                st.printed, cur));
        }
        const auto final_poly = cur.as_poly();
        rep.checks.push_back({"replay ends in a polynomial", final_poly.has_value(), to_string(cur)});
        const auto red = moebius_to_polynomial(*rec.start);
        const bool equiv = red && final_poly && affine_equivalent(red->poly, *final_poly);
        rep.checks.push_back({"reduction is affine-equivalent to the printed polynomial", equiv,
                              red ? "reduced to " + to_string(red->poly) : "no rational totally ramified point"});
    }
    return rep;
}

}  // namespace ritt
