#include <doctest.h>

#include "gen.hpp"
#include "ritt/errors.hpp"
#include "ritt/normal_forms.hpp"
#include "ritt/ramify.hpp"

using namespace ritt;

namespace {
const Poly z = Poly::identity();
Poly k(const Rat& c) { return Poly::constant(c); }

RatFunc recompose(const PolynomialReduction& r) {
    const RatFunc parts[] = {r.post.as_ratfunc(), RatFunc(r.poly), r.pre.as_ratfunc()};
    return compose_chain(parts);
}

Moebius random_moebius(gen::Source& src) {
    for (;;) {
        const Rat a = src.rational(3), b = src.rational(3), c = src.rational(3), d = src.rational(3);
        if (a * d - b * c != 0) return Moebius(a, b, c, d);
    }
}
}  // namespace

TEST_CASE("hurwitz_power_class examples") {
    CHECK(hurwitz_power_class((z - k(1)).pow(3) + k(2), 3));
    CHECK(!hurwitz_power_class(chebyshev(3), 3));
    CHECK(!hurwitz_power_class(Poly({0, 1, 0, 0, 1}), 4));
    CHECK(!hurwitz_power_class(z.pow(3), 4));
}

TEST_CASE("totally_ramified_points: z^d") {
    for (unsigned d = 2; d <= 6; ++d) {
        const auto scan = totally_ramified_points(RatFunc(z.pow(d)));
        REQUIRE(scan.points.size() == 2);
        CHECK(scan.points[0].point == SpherePoint::at(0));
        CHECK(scan.points[0].value == SpherePoint::at(0));
        CHECK(scan.points[0].multiplicity == d);
        CHECK(scan.points[1].point.is_infinity());
        CHECK(scan.points[1].value.is_infinity());
        CHECK(scan.points[1].multiplicity == d);
        CHECK(scan.status() == RamificationStatus::Found);
    }
}

TEST_CASE("totally_ramified_points: (z^2+1)/(2z)") {
    const auto scan = totally_ramified_points(RatFunc(z * z + k(1), Poly::monomial(2, 1)));
    REQUIRE(scan.points.size() == 2);
    CHECK(scan.points[0].point == SpherePoint::at(-1));
    CHECK(scan.points[0].value == SpherePoint::at(-1));
    CHECK(scan.points[1].point == SpherePoint::at(1));
    CHECK(scan.points[1].value == SpherePoint::at(1));
    CHECK(scan.points[0].multiplicity == 2);
}

TEST_CASE("totally_ramified_points: (z^2+2)/(z+1) has two irrational points") {
    const RatFunc R(z * z + k(2), z + k(1));
    // Discriminant oracle: R' numerator is z^2 + 2z - 2, discriminant 12.
    const Poly w = R.num().derivative() * R.den() - R.num() * R.den().derivative();
    CHECK(w == Poly({-2, 2, 1}));
    const Rat disc = w.coeff(1) * w.coeff(1) - 4 * w.coeff(2) * w.coeff(0);
    CHECK(disc == 12);
    CHECK(rational_roots(w).empty());
    const auto scan = totally_ramified_points(R);
    CHECK(scan.points.empty());
    CHECK(scan.irrational_candidates == 2);
    CHECK(scan.status() == RamificationStatus::Unknown);
}

TEST_CASE("totally_ramified_points: no point, and the degree precondition") {
    // T_3 has two simple critical points and infinity of multiplicity 3.
    const auto t3 = totally_ramified_points(RatFunc(chebyshev(3)));
    REQUIRE(t3.points.size() == 1);
    CHECK(t3.points[0].point.is_infinity());
    const auto y = totally_ramified_points(RatFunc(Poly({0, 0, 1, 1}), Poly({1, 0, 1})));
    for (const auto& p : y.points) CHECK(p.multiplicity == 3);
    CHECK_THROWS_AS(totally_ramified_points(RatFunc(z)), DegreeError);
    CHECK_THROWS_AS(totally_ramified_points(RatFunc(k(3))), DegreeError);
}

TEST_CASE("moebius_to_polynomial examples") {
    {
        const RatFunc R = RatFunc(Rat(1, 4) * (z - k(1)).pow(3), z * z + k(1)) + RatFunc(k(1));
        const auto r = moebius_to_polynomial(R);
        REQUIRE(r);
        CHECK(recompose(*r) == R);
        CHECK(affine_equivalent(r->poly, z * (Poly({1, 2, 2}))));
    }
    {
        const RatFunc R(Rat(1, 54) * (z + k(7)).pow(3), (z - k(1)).pow(2));
        const auto r = moebius_to_polynomial(R);
        REQUIRE(r);
        CHECK(recompose(*r) == R);
        CHECK(affine_equivalent(r->poly, -z * (Poly({1, 8})).pow(2)));
    }
    {
        const auto r = moebius_to_polynomial(RatFunc(z.pow(3)));
        REQUIRE(r);
        CHECK(r->post == Moebius::identity());
        CHECK(r->pre == Moebius::identity());
        CHECK(r->poly == z.pow(3));
    }
    CHECK(!moebius_to_polynomial(RatFunc(z * z + k(2), z + k(1))));
}

TEST_CASE("property: reductions recompose exactly") {
    gen::Source src(31);
    int found = 0;
    for (int i = 0; i < 60; ++i) {
        const RatFunc R = src.ratfunc(src.integer(2, 4), 4);
        if (R.degree() < 2) continue;
        if (const auto r = moebius_to_polynomial(R)) {
            ++found;
            CHECK(recompose(*r) == R);
            CHECK(r->poly.degree() == R.degree());
        }
    }
    // conjugated polynomials always reduce
    for (int i = 0; i < 40; ++i) {
        const Poly f = src.poly(src.integer(2, 5), 5);
        const Moebius m1 = random_moebius(src), m2 = random_moebius(src);
        const RatFunc parts[] = {m1.as_ratfunc(), RatFunc(f), m2.as_ratfunc()};
        const RatFunc R = compose_chain(parts);
        const auto r = moebius_to_polynomial(R);
        REQUIRE(r);
        ++found;
        CHECK(recompose(*r) == R);
        CHECK(affine_equivalent(r->poly, f));
    }
    CHECK(found >= 40);
}

TEST_CASE("property: degree-2 maps with rational critical data reduce") {
    gen::Source src(32);
    for (int i = 0; i < 80; ++i) {
        const Moebius m1 = random_moebius(src), m2 = random_moebius(src);
        const RatFunc parts[] = {m1.as_ratfunc(), RatFunc(z * z), m2.as_ratfunc()};
        const RatFunc R = compose_chain(parts);
        const auto scan = totally_ramified_points(R);
        CHECK(scan.points.size() == 2);
        CHECK(scan.irrational_candidates == 0);
        const auto r = moebius_to_polynomial(R);
        REQUIRE(r);
        CHECK(recompose(*r) == R);
        CHECK(r->poly.degree() == 2);
    }
}

TEST_CASE("property: hurwitz class implies a finite point of full multiplicity") {
    gen::Source src(33);
    for (int i = 0; i < 60; ++i) {
        const unsigned p = static_cast<unsigned>(src.integer(2, 7));
        const Poly f = src.nonzero(4) * (z - k(src.rational(4))).pow(p) + k(src.rational(4));
        REQUIRE(hurwitz_power_class(f, p));
        const auto scan = totally_ramified_points(RatFunc(f));
        bool finite = false;
        for (const auto& pt : scan.points)
            if (!pt.point.is_infinity() && pt.multiplicity == p) finite = true;
        CHECK(finite);
        // perturbing the linear term leaves the class (for p >= 3)
        if (p >= 3) CHECK(!hurwitz_power_class(f + z, p));
    }
}
