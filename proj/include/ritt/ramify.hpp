#pragma once

// Critical-point structure over Q: membership in the Hurwitz class of z^p,
// totally ramified points, and reduction of rational maps to polynomials.

#include <optional>
#include <string>
#include <vector>

#include "ritt/algebra.hpp"

namespace ritt {

/// A point of Q u {infinity}.
struct SpherePoint {
    std::optional<Rat> finite;  // nullopt means infinity

    static SpherePoint infinity() { return {}; }
    static SpherePoint at(const Rat& x) { return {x}; }
    bool is_infinity() const noexcept { return !finite.has_value(); }
    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

std::string to_string(const SpherePoint& p);

struct RamifiedPoint {
    SpherePoint point;
    SpherePoint value;
    unsigned multiplicity;
};

enum class RamificationStatus { Found, NotFound, Unknown };

struct RamificationScan {
    std::vector<RamifiedPoint> points;  // rational ones, finite ascending, then infinity
    unsigned irrational_candidates = 0; // candidates with irrational coordinates (not examined)

    /// Unknown when nothing rational was found but irrational candidates remain.
    RamificationStatus status() const noexcept;
};

/// deg f = p and f = a(z-b)^p + c; checked through f' = lambda (z-b)^{p-1}.
bool hurwitz_power_class(const Poly& f, unsigned p);

/// Points z0 whose fibre over R(z0) is z0 alone with multiplicity deg R.
/// Throws DegreeError when deg R < 2.
RamificationScan totally_ramified_points(const RatFunc& R);

struct PolynomialReduction {
    Moebius post;
    Poly poly;  // conjugacy-canonical
    Moebius pre;
};

/// post o poly o pre = R exactly, when R has a rational totally ramified point.
/// A point fixed at infinity is preferred so polynomials come back unchanged
/// up to conjugacy normalization.
std::optional<PolynomialReduction> moebius_to_polynomial(const RatFunc& R);

}  // namespace ritt
