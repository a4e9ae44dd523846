#pragma once

// Seeded generators for property tests.

#include <random>

#include "ritt/algebra.hpp"

namespace gen {

using ritt::Poly;
using ritt::Rat;
using ritt::RatFunc;

class Source {
public:
    explicit Source(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rat rational(int height) {
        int num = integer(-height, height);
        Rat r(num, integer(1, height));
        r.canonicalize();
        return r;
    }
    Rat nonzero(int height) {
        for (;;) {
            Rat r = rational(height);
            if (r != 0) return r;
        }
    }

    /// Exactly degree d, coefficients of height <= h.
    Poly poly(int d, int h) {
        std::vector<Rat> c;
        for (int i = 0; i < d; ++i) c.push_back(rational(h));
        c.push_back(nonzero(h));
        return Poly(std::move(c));
    }

    /// Non-constant reduced quotient of degree <= d.
    RatFunc ratfunc(int d, int h) {
        for (;;) {
            RatFunc r(poly(integer(0, d), h), poly(integer(0, d), h));
            if (r.degree() >= 1) return r;
        }
    }

    /// Affine-twisted factor of degree d of a random shape: generic,
    /// monomial, Chebyshev, or z^s h(z^r).
    Poly factor(int d, int h) {
        Poly core;
        switch (integer(0, 3)) {
            case 0: return poly(d, h);
            case 1: core = Poly::monomial(1, static_cast<unsigned>(d)); break;
            case 2: core = ritt::chebyshev(static_cast<unsigned>(d)); break;
            default: {
                // z^s h(z^r) with s + r*deg h = d, r >= 2
                std::vector<std::pair<int, int>> shapes;
                for (int r = 2; r < d; ++r)
                    for (int e = 1; r * e < d; ++e) shapes.emplace_back(r, e);
                if (shapes.empty()) return poly(d, h);
                const auto [r, e] = shapes[static_cast<std::size_t>(integer(0, static_cast<int>(shapes.size()) - 1))];
                const Poly hh = poly(e, 2);
                core = ritt::compose(hh, Poly::monomial(1, static_cast<unsigned>(r))) *
                       Poly::monomial(1, static_cast<unsigned>(d - r * e));
            }
        }
        const Poly outer = Poly::linear(nonzero(2), rational(2));
        const Poly inner = Poly::linear(nonzero(2), rational(2));
        return ritt::compose(outer, ritt::compose(core, inner));
    }

    /// Random ordered factorization of n into parts >= 2.
    std::vector<int> degree_split(int n) {
        std::vector<int> parts;
        while (n > 1) {
            std::vector<int> ds;
            for (int d = 2; d <= n; ++d)
                if (n % d == 0) ds.push_back(d);
            const int d = ds[static_cast<std::size_t>(integer(0, static_cast<int>(ds.size()) - 1))];
            parts.push_back(d);
            n /= d;
        }
        return parts;
    }

    /// Composition of random factors with total degree n, heights <= h.
    Poly composite(int n, int h) {
        Poly out = Poly::identity();
        for (int d : degree_split(n)) out = ritt::compose(out, factor(d, h));
        return out;
    }

    /// Pairs (f, g) with deg(f o g) <= 12, heights <= 5; a few affine sides.
    std::vector<std::pair<Poly, Poly>> composition_pairs(int count) {
        static const std::vector<std::pair<int, int>> shapes = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2},
                                                                {2, 6}, {6, 2}, {3, 3}, {3, 4}, {4, 3},
                                                                {2, 5}, {5, 2}, {1, 4}, {4, 1}};
        auto side = [this](int d) { return d == 1 ? Poly::linear(nonzero(3), rational(3)) : composite(d, 5); };
        std::vector<std::pair<Poly, Poly>> out;
        for (int i = 0; i < count; ++i) {
            const auto [a, b] = shapes[static_cast<std::size_t>(integer(0, static_cast<int>(shapes.size()) - 1))];
            out.emplace_back(side(a), side(b));
        }
        return out;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace gen
