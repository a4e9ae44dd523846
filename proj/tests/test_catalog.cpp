#include <doctest.h>

#include "ritt/catalog.hpp"
#include "ritt/errors.hpp"

using namespace ritt;

namespace {
const Poly z = Poly::identity();
Poly k(const Rat& c) { return Poly::constant(c); }

// Pointwise oracle: evaluates a chain factor by factor, independent of compose.
std::optional<Rat> eval_chain(const std::vector<RatFunc>& chain, Rat x) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const auto y = (*it)(x);
        if (!y) return std::nullopt;
        x = *y;
    }
    return x;
}

const Check* find(const FixtureReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}
}  // namespace

TEST_CASE("fixture records") {
    const auto b = fixture("bergweiler");
    REQUIRE(b.chains.size() == 2);
    CHECK(b.chains[0].size() == 3);
    CHECK(b.chains[1].size() == 2);
    CHECK(b.expected_degree == 12);

    const auto s = fixture("s4");
    CHECK(s.chains[0].size() == 4);
    CHECK(s.chains[1].size() == 3);
    CHECK(s.expected_degree == 24);

    const auto t = fixture("chebyshev(3)");
    REQUIRE(t.chains.size() == 2);
    const RatFunc y(z * z + k(1), Poly::monomial(2, 1));
    CHECK(t.chains[0] == std::vector<RatFunc>{RatFunc(chebyshev(3)), y});
    CHECK(t.chains[1] == std::vector<RatFunc>{y, RatFunc(z.pow(3))});

    CHECK(fixture("moebius-chain-1").start.has_value());
    CHECK_THROWS_AS(fixture("nope"), UnknownFixture);
    CHECK_THROWS_AS(fixture("chebyshev(1)"), UnknownFixture);
    CHECK(fixture_names().size() == 8);
}

TEST_CASE("bergweiler: chains agree, the printed closed form does not") {
    const auto f = fixture("bergweiler");
    const auto r = verify_fixture("bergweiler");
    REQUIRE(r.value);
    CHECK(r.value->degree() == 12);
    CHECK(find(r, "chain 1 equals chain 2")->pass);
    CHECK(!find(r, "printed closed form equals chain 1")->pass);
    CHECK(!r.verified());
    // hand-derived value ((z^4 - 8z)/(z^3 + 1))^3, checked pointwise
    const RatFunc q(Poly({0, -8, 0, 0, 1}), Poly({1, 0, 0, 1}));
    for (int i = -6; i <= 6; ++i) {
        const Rat x(i, 3);
        const auto a = eval_chain(f.chains[0], x), b = eval_chain(f.chains[1], x);
        const auto c = q(x);
        if (!a || !b || !c) continue;
        CHECK(*a == *b);
        CHECK(*a == *c * *c * *c);
    }
}

TEST_CASE("s4: the printed chains differ by a scaling of the innermost factor") {
    const auto f = fixture("s4");
    const auto r = verify_fixture("s4");
    CHECK(!find(r, "chain 1 equals chain 2")->pass);
    CHECK(find(r, "printed closed form, read with (4z^4+1)^4, equals chain 2")->pass);
    CHECK(find(r, "chain 1 with innermost factor 2*z^2 equals chain 2")->pass);
    CHECK(find(r, "chain 1 with innermost factor 2*z^2 equals chain 2")->informational);
    CHECK(compose_chain(f.chains[0]).degree() == 24);
    CHECK(compose_chain(f.chains[1]).degree() == 24);
    // pointwise: chain 1 with 2z^2 innermost matches chain 2, the printed one does not
    auto fixed = f.chains[0];
    fixed.back() = RatFunc(Poly::monomial(2, 2));
    REQUIRE(f.chains[0].back() == RatFunc(z * z));
    for (int i = 1; i <= 8; ++i) {
        const Rat x(i, 5);
        const auto a = eval_chain(fixed, x), b = eval_chain(f.chains[1], x), c = eval_chain(f.chains[0], x);
        if (!a || !b) continue;
        CHECK(*a == *b);
        if (c) CHECK(*c != *b);
    }
}

TEST_CASE("chebyshev fixtures verify") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        const std::string name = "chebyshev(" + std::to_string(p) + ")";
        const auto r = verify_fixture(name);
        CHECK(r.verified());
        REQUIRE(r.value);
        CHECK(r.value->degree() == static_cast<int>(2 * p));
        const auto f = fixture(name);
        for (int i = 2; i <= 6; ++i) CHECK(eval_chain(f.chains[0], Rat(i, 7)) == eval_chain(f.chains[1], Rat(i, 7)));
    }
}

TEST_CASE("reduction chains replay") {
    const auto r1 = verify_fixture("moebius-chain-1");
    CHECK(r1.verified());
    CHECK(find(r1, "replay ends in a polynomial")->detail == to_string(z * Poly({1, 2, 2})));
    const auto r2 = verify_fixture("moebius-chain-2");
    CHECK(r2.verified());
    CHECK(find(r2, "replay ends in a polynomial")->detail == to_string(-z * Poly({1, 8}).pow(2)));
}

TEST_CASE("verification is deterministic") {
    for (const auto& name : fixture_names()) {
        const auto a = verify_fixture(name), b = verify_fixture(name);
        REQUIRE(a.checks.size() == b.checks.size());
        for (std::size_t i = 0; i < a.checks.size(); ++i) {
            CHECK(a.checks[i].name == b.checks[i].name);
            CHECK(a.checks[i].pass == b.checks[i].pass);
            CHECK(a.checks[i].detail == b.checks[i].detail);
        }
        CHECK(a.value == b.value);
    }
}
