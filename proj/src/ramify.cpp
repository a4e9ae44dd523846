#include "ritt/ramify.hpp"

#include <algorithm>

#include "ritt/errors.hpp"
#include "ritt/normal_forms.hpp"

namespace ritt {

std::string to_string(const SpherePoint& p) { return p.is_infinity() ? "oo" : to_string(*p.finite); }

RamificationStatus RamificationScan::status() const noexcept {
    if (!points.empty()) return RamificationStatus::Found;
    return irrational_candidates > 0 ? RamificationStatus::Unknown : RamificationStatus::NotFound;
}

bool hurwitz_power_class(const Poly& f, unsigned p) {
    if (p < 2) throw PreconditionError("hurwitz_power_class: p must be at least 2");
    if (f.degree() != static_cast<int>(p)) return false;
    const Poly df = f.derivative();
    if (p == 2) return true;
    const auto pf = power_form(df);
    return pf && pf->offset == 0;
}

namespace {

unsigned root_order(Poly p, const Rat& x) {
    const Poly lin = Poly::linear(1, -x);
    unsigned k = 0;
    while (!p.is_zero()) {
        auto [q, r] = divmod(p, lin);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++k;
    }
    return k;
}

SpherePoint image(const RatFunc& R, const SpherePoint& z) {
    const Poly& n = R.num();
    const Poly& d = R.den();
    if (z.is_infinity()) {
        if (n.degree() > d.degree()) return SpherePoint::infinity();
        if (n.degree() < d.degree()) return SpherePoint::at(0);
        return SpherePoint::at(n.lead() / d.lead());
    }
    const auto v = R(*z.finite);
    return v ? SpherePoint::at(*v) : SpherePoint::infinity();
}

// Local degree of R at z over its image w.
unsigned local_degree(const RatFunc& R, const SpherePoint& z, const SpherePoint& w) {
    const int d = R.degree();
    const Poly fibre = w.is_infinity() ? R.den() : R.num() - R.den() * (*w.finite);
    if (z.is_infinity()) {
        if (w.is_infinity()) return static_cast<unsigned>(R.num().degree() - R.den().degree());
        return static_cast<unsigned>(d - fibre.degree());
    }
    return root_order(fibre, *z.finite);
}

}  // namespace

RamificationScan totally_ramified_points(const RatFunc& R) {
    const int d = R.degree();
    if (d < 2) throw DegreeError("totally_ramified_points: degree must be at least 2");
    RamificationScan scan;
    const Poly w = R.num().derivative() * R.den() - R.num() * R.den().derivative();

    std::vector<SpherePoint> candidates;
    if (w.degree() >= 1) {
        for (const auto& [s, mult] : squarefree_decomposition(w)) {
            if (mult + 1 < static_cast<unsigned>(d)) continue;
            const auto roots = rational_roots(s);
            scan.irrational_candidates += static_cast<unsigned>(s.degree()) - static_cast<unsigned>(roots.size());
            for (const auto& r : roots) candidates.push_back(SpherePoint::at(r));
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const SpherePoint& a, const SpherePoint& b) { return *a.finite < *b.finite; });
    candidates.push_back(SpherePoint::infinity());

    for (const auto& z : candidates) {
        const SpherePoint v = image(R, z);
        const unsigned m = local_degree(R, z, v);
        if (m == static_cast<unsigned>(d)) scan.points.push_back({z, v, m});
    }
    return scan;
}

std::optional<PolynomialReduction> moebius_to_polynomial(const RatFunc& R) {
    const RamificationScan scan = totally_ramified_points(R);
    if (scan.points.empty()) return std::nullopt;
    const RamifiedPoint* chosen = &scan.points.front();
    for (const auto& p : scan.points)
        if (p.point.is_infinity() && p.value.is_infinity()) chosen = &p;

    // sigma sends infinity to z0, tau sends w0 to infinity.
    const Moebius sigma = chosen->point.is_infinity() ? Moebius::identity()
                                                      : Moebius(*chosen->point.finite, 1, 1, 0);
    const Moebius tau = chosen->value.is_infinity() ? Moebius::identity()
                                                    : Moebius(0, 1, 1, -*chosen->value.finite);
    const RatFunc f0 = compose(tau.as_ratfunc(), compose(R, sigma.as_ratfunc()));
    const auto poly = f0.as_poly();
    if (!poly) throw ConsistencyFailure("moebius_to_polynomial: reduction is not polynomial");

    const ConjugacyNormal cn = conjugacy_canonical(*poly);
    PolynomialReduction out{tau.inverse() * cn.conjugator, cn.canonical, cn.conjugator.inverse() * sigma.inverse()};
    const RatFunc back = compose(out.post.as_ratfunc(), compose(RatFunc(out.poly), out.pre.as_ratfunc()));
    if (!(back == R)) throw ConsistencyFailure("moebius_to_polynomial: recomposition mismatch");
    return out;
}

}  // namespace ritt
