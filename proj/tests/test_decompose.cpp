#include <doctest.h>

#include "gen.hpp"
#include "ritt/decompose.hpp"
#include "ritt/errors.hpp"

using namespace ritt;

namespace {
const Poly z = Poly::identity();
Poly k(const Rat& c) { return Poly::constant(c); }
Decomposition dec(std::vector<Poly> f) { return Decomposition{std::move(f)}; }
}  // namespace

TEST_CASE("right_factor examples") {
    auto a = right_factor(z.pow(6), 3);
    REQUIRE(a);
    CHECK(a->left == z * z);
    CHECK(a->right == z.pow(3));

    auto b = right_factor(z.pow(4) + Poly::monomial(2, 2) + k(1), 2);
    REQUIRE(b);
    CHECK(b->left == Poly({1, 2, 1}));
    CHECK(b->right == z * z);

    CHECK(!right_factor(Poly({0, 1, 0, 0, 1}), 2));
    CHECK_THROWS_AS(right_factor(z.pow(6), 4), DegreeError);
    CHECK_THROWS_AS(right_factor(z.pow(6), 6), DegreeError);
}

TEST_CASE("brute-force oracle: z^4 + z has no quadratic right factor") {
    // g(h) with h = z^2 + d z: the z^3 coefficient forces 2ad = 0 and the
    // z^1 coefficient then forces b d = 1 with d = 0.
    for (int d = -5; d <= 5; ++d) {
        const Poly h = Poly({0, d, 1});
        const Poly h2 = h * h;
        // f - h^2 must be b*h + c
        const Poly rest = Poly({0, 1, 0, 0, 1}) - h2;
        CHECK(rest.degree() >= 0);
        const auto [q, r] = divmod(rest, h);
        CHECK((q.degree() > 0 || r.degree() > 0));
    }
}

TEST_CASE("is_prime examples") {
    CHECK(is_prime(Poly({0, 1, 0, 0, 0, 1})));
    CHECK(!is_prime(z.pow(4)));
    CHECK(is_prime(chebyshev(3)));
    CHECK_THROWS_AS(is_prime(z), PreconditionError);
}

TEST_CASE("complete_decompositions examples") {
    const auto a = complete_decompositions(z.pow(6));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == dec({z * z, z.pow(3)}));
    CHECK(a[1] == dec({z.pow(3), z * z}));

    const auto b = complete_decompositions(Poly({0, 1, 0, 0, 1}));
    REQUIRE(b.size() == 1);
    CHECK(b[0].length() == 1);

    const auto c = complete_decompositions(chebyshev(6));
    REQUIRE(c.size() == 2);
    const auto t23 = canonical_form(dec({chebyshev(2), chebyshev(3)}));
    const auto t32 = canonical_form(dec({chebyshev(3), chebyshev(2)}));
    CHECK(((c[0] == t23 && c[1] == t32) || (c[0] == t32 && c[1] == t23)));

    CHECK(complete_decompositions(z.pow(12)).size() == 3);
}

TEST_CASE("decomposition_length examples") {
    CHECK(decomposition_length(z.pow(8)) == 3);
    CHECK(decomposition_length(Poly({0, 1, 0, 0, 1})) == 1);
    CHECK(decomposition_length(chebyshev(6)) == 2);
}

TEST_CASE("canonical form") {
    const auto c = canonical_form(dec({Poly({1, 0, 4}), Poly({3, 0, 2})}));
    CHECK(c.factors[1] == z * z);
    CHECK(c.value() == compose(Poly({1, 0, 4}), Poly({3, 0, 2})));
    const auto pd = prime_decomposition(chebyshev(6));
    CHECK(pd.length() == 2);
    CHECK(pd.value() == chebyshev(6));
}

TEST_CASE("ritt_move examples") {
    const auto a = ritt_move(dec({z * z, z.pow(3)}), AffineInsert{0, Moebius::affine(2, 0)});
    CHECK(a == dec({Poly::monomial(4, 2), Poly::monomial(Rat(1, 2), 3)}));

    const auto b = ritt_move(dec({chebyshev(2), chebyshev(3)}), ChebyshevSwap{0});
    CHECK(b == dec({chebyshev(3), chebyshev(2)}));

    const auto c = ritt_move(dec({z * z, z.pow(3) * (z.pow(3) + k(1))}), MonomialExchange{0, 3});
    CHECK(c == dec({z * z * (z + k(1)).pow(2), z.pow(3)}));

    CHECK_THROWS_AS(ritt_move(dec({z * z, z.pow(3)}), AffineInsert{0, Moebius::inversion()}), MoveNotApplicable);
    CHECK_THROWS_AS(ritt_move(dec({z * z, z.pow(3)}), AffineInsert{1, Moebius::identity()}), MoveNotApplicable);
    CHECK_THROWS_AS(ritt_move(dec({Poly({0, 1, 1}), Poly({0, 1, 0, 1})}), ChebyshevSwap{0}), MoveNotApplicable);
    CHECK_THROWS_AS(ritt_move(dec({Poly({0, 1, 1}), Poly({0, 1, 0, 1})}), MonomialExchange{0, 3}),
                    MoveNotApplicable);
}

TEST_CASE("decompositions_equivalent examples") {
    const auto d1 = dec({z * z, z.pow(3)});
    const auto d2 = dec({compose(z * z, Poly::linear(2, 0)), compose(Poly::linear(Rat(1, 2), 0), z.pow(3))});
    CHECK(decompositions_equivalent(d1, d2, EquivalenceMode::Affine));
    const auto d3 = dec({z.pow(3), z * z});
    CHECK(!decompositions_equivalent(d1, d3, EquivalenceMode::Affine));
    CHECK(decompositions_equivalent(d1, d3, EquivalenceMode::Ritt, 100));
    CHECK(decompositions_equivalent(dec({chebyshev(2), chebyshev(3)}), dec({chebyshev(3), chebyshev(2)}),
                                    EquivalenceMode::Ritt, 100));
    CHECK_THROWS_AS(decompositions_equivalent(d1, dec({z.pow(4)}), EquivalenceMode::Affine), PreconditionError);
}

TEST_CASE("ritt search reports an exhausted budget") {
    const auto all = complete_decompositions(z.pow(24));
    REQUIRE(all.size() > 2);
    CHECK_THROWS_AS(decompositions_equivalent(all.front(), all.back(), EquivalenceMode::Ritt, 1), BudgetExhausted);
    CHECK(decompositions_equivalent(all.front(), all.back(), EquivalenceMode::Ritt, 10000));
}

TEST_CASE("property: enumerated decompositions round-trip and share a length") {
    gen::Source src(21);
    for (int i = 0; i < 60; ++i) {
        const int n = std::vector<int>{4, 6, 8, 9, 12, 16}[static_cast<std::size_t>(src.integer(0, 5))];
        const Poly f = src.composite(n, 5);
        const auto all = complete_decompositions(f);
        for (const auto& d : all) {
            CHECK(d.value() == f);
            CHECK(d.length() == all.front().length());
            for (const auto& g : d.factors) CHECK(is_prime(g));
        }
        CHECK(decomposition_length(f) == all.front().length());
    }
}

TEST_CASE("property: right factors are unique and re-derivable") {
    gen::Source src(22);
    for (int i = 0; i < 80; ++i) {
        const int a = src.integer(2, 4), b = src.integer(2, 4);
        const Poly g = src.poly(a, 5), h = src.poly(b, 5);
        const Poly f = compose(g, h);
        auto rf = right_factor(f, static_cast<unsigned>(b));
        REQUIRE(rf);
        CHECK(compose(rf->left, rf->right) == f);
        CHECK(rf->right.lead() == 1);
        CHECK(rf->right.coeff(0) == 0);
        auto again = right_factor(compose(rf->left, rf->right), static_cast<unsigned>(b));
        REQUIRE(again);
        CHECK(again->right == rf->right);
    }
}

TEST_CASE("property: moves preserve the composed value") {
    gen::Source src(23);
    for (int i = 0; i < 40; ++i) {
        const Poly f = src.composite(std::vector<int>{6, 8, 12}[static_cast<std::size_t>(src.integer(0, 2))], 4);
        for (const auto& d : complete_decompositions(f)) {
            for (const auto& n : ritt_neighbors(d)) CHECK(n.value() == f);
            for (std::size_t pos = 0; pos + 1 < d.length(); ++pos) {
                const Moebius a(src.nonzero(3), src.rational(3), 0, 1);
                CHECK(ritt_move(d, AffineInsert{pos, a}).value() == f);
            }
        }
    }
}

TEST_CASE("property: prime decompositions of small composites are ritt-connected") {
    gen::Source src(24);
    for (int i = 0; i < 30; ++i) {
        const Poly f = src.composite(std::vector<int>{4, 6, 8, 12}[static_cast<std::size_t>(src.integer(0, 3))], 4);
        const auto all = complete_decompositions(f);
        for (std::size_t j = 1; j < all.size(); ++j)
            CHECK(decompositions_equivalent(all[0], all[j], EquivalenceMode::Ritt, 10000));
    }
}
