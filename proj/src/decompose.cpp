#include "ritt/decompose.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "ritt/errors.hpp"
#include "ritt/integer.hpp"

namespace ritt {

std::string to_string(const Decomposition& d) {
    std::string out;
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (i) out += " . ";
        out += "(" + to_string(d.factors[i]) + ")";
    }
    return out;
}

std::optional<RightFactor> right_factor(const Poly& f, unsigned m) {
    const int n = f.degree();
    if (n < 2) throw DegreeError("right_factor: degree must be at least 2");
    const unsigned un = static_cast<unsigned>(n);
    if (m <= 1 || m >= un || un % m != 0)
        throw DegreeError("right_factor: m must be a proper divisor of deg f (m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
    const unsigned r = un / m;
    const Rat& lambda = f.lead();

    // Top m coefficients of f determine h through lambda * h^r.
    std::vector<Rat> h(m + 1);
    h[m] = 1;
    for (unsigned k = 1; k < m; ++k) {
        const unsigned j = m - k;
        h[j] = 0;
        const Poly approx = Poly(h).pow(r) * lambda;
        const Rat c = approx.coeff(n - static_cast<int>(k));
        h[j] = (f.coeff(n - static_cast<int>(k)) - c) / (lambda * r);
    }
    const Poly hp(h);

    // h-adic digits must all be constants.
    std::vector<Rat> digits;
    Poly rem = f;
    while (!rem.is_zero()) {
        auto [q, rr] = divmod(rem, hp);
        if (rr.degree() > 0) return std::nullopt;
        digits.push_back(rr.coeff(0));
        rem = std::move(q);
    }
    return RightFactor{Poly(std::move(digits)), hp};
}

bool is_prime(const Poly& f) {
    const int n = f.degree();
    if (n < 2) throw PreconditionError("is_prime: degree must be at least 2");
    for (unsigned m : divisors(static_cast<unsigned>(n))) {
        if (m == 1 || m == static_cast<unsigned>(n)) continue;
        if (right_factor(f, m)) return false;
    }
    return true;
}

LeftNormal left_normalize(const Poly& f) {
    if (f.degree() < 1) throw DegreeError("left_normalize of a constant");
    const Rat scale = f.lead();
    const Rat shift = f.coeff(0);
    Poly g = (f - Poly::constant(shift)) * Rat(1 / scale);
    return {std::move(g), scale, shift};
}

Decomposition canonical_form(const Decomposition& d) {
    Decomposition out = d;
    for (std::size_t i = out.factors.size(); i-- > 1;) {
        if (out.factors[i].degree() < 1) continue;
        LeftNormal ln = left_normalize(out.factors[i]);
        out.factors[i] = std::move(ln.normalized);
        out.factors[i - 1] = compose(out.factors[i - 1], Poly::linear(ln.scale, ln.shift));
    }
    return out;
}

namespace {

void enumerate(const Poly& f, std::map<std::string, Decomposition>& out) {
    if (is_prime(f)) {
        Decomposition d{{f}};
        out.emplace(to_string(d), std::move(d));
        return;
    }
    const unsigned n = static_cast<unsigned>(f.degree());
    for (unsigned m : divisors(n)) {
        if (m == 1 || m == n) continue;
        auto rf = right_factor(f, m);
        if (!rf || !is_prime(rf->right)) continue;
        std::map<std::string, Decomposition> left;
        enumerate(rf->left, left);
        for (auto& [_, d] : left) {
            Decomposition ext = d;
            ext.factors.push_back(rf->right);
            ext = canonical_form(ext);
            out.emplace(to_string(ext), std::move(ext));
        }
    }
}

}  // namespace

std::vector<Decomposition> complete_decompositions(const Poly& f) {
    if (f.degree() < 2) throw PreconditionError("complete_decompositions: degree must be at least 2");
    std::map<std::string, Decomposition> found;
    enumerate(f, found);
    std::vector<Decomposition> out;
    for (auto& [_, d] : found) out.push_back(std::move(d));
    return out;
}

Decomposition prime_decomposition(const Poly& f) {
    if (f.degree() < 2) throw PreconditionError("prime_decomposition: degree must be at least 2");
    // The smallest admissible right factor is always prime.
    Decomposition d;
    Poly rest = f;
    for (;;) {
        const unsigned n = static_cast<unsigned>(rest.degree());
        std::optional<RightFactor> rf;
        for (unsigned m : divisors(n)) {
            if (m == 1 || m == n) continue;
            if ((rf = right_factor(rest, m))) break;
        }
        if (!rf) break;
        d.factors.insert(d.factors.begin(), std::move(rf->right));
        rest = std::move(rf->left);
    }
    d.factors.insert(d.factors.begin(), std::move(rest));
    return canonical_form(d);
}

std::size_t decomposition_length(const Poly& f) {
    const auto all = complete_decompositions(f);
    const std::size_t len = all.front().length();
    for (const auto& d : all) {
        if (d.length() != len)
            throw LengthDisagreement("prime decompositions of " + to_string(f) + " have lengths " +
                                     std::to_string(len) + " and " + std::to_string(d.length()));
    }
    return len;
}

// ---------------------------------------------------------------- moves

std::string to_string(const RittMoveSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AffineInsert>)
                return "AffineInsert(" + std::to_string(s.position) + ", " + to_string(s.map) + ")";
            else if constexpr (std::is_same_v<T, ChebyshevSwap>)
                return "ChebyshevSwap(" + std::to_string(s.position) + ")";
            else
                return "MonomialExchange(" + std::to_string(s.position) + ", r=" + std::to_string(s.r) + ")";
        },
        spec);
}

bool is_chebyshev_like(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n <= 2) return true;
    // Centre, then normalize monic with zero constant term; what remains is
    // T_n(alpha z) / (2^{n-1} alpha^n), which depends on alpha^2 only.
    const Rat t = f.coeff(n - 1) / (f.lead() * n);
    const Poly centred = compose(f, Poly::linear(1, -t));
    const Poly g = left_normalize(centred).normalized;
    const Rat c = g.coeff(n - 2);
    if (c == 0) return false;
    const Rat alpha2 = Rat(-n) / (4 * c);
    const Poly tn = chebyshev(static_cast<unsigned>(n));
    for (int k = 1; k < n; ++k) {
        Rat expected = 0;
        if ((n - k) % 2 == 0) expected = tn.coeff(k) / tn.lead() * rat_pow(alpha2, -(n - k) / 2);
        if (g.coeff(k) != expected) return false;
    }
    return true;
}

namespace {

void require_pair(const Decomposition& d, std::size_t pos) {
    if (pos + 1 >= d.factors.size())
        throw MoveNotApplicable("position " + std::to_string(pos) + " does not index an adjacent factor pair");
}

Decomposition replace_pair(const Decomposition& d, std::size_t pos, Poly left, Poly right) {
    Decomposition out = d;
    out.factors[pos] = std::move(left);
    out.factors[pos + 1] = std::move(right);
    return out;
}

std::string pair_key(const Poly& left, const Poly& right) {
    return to_string(canonical_form(Decomposition{{left, right}}));
}

std::optional<std::pair<Poly, Poly>> monomial_forward(const Poly& left, const Poly& right, unsigned r) {
    const auto pf = power_form(left);
    if (!pf || left.degree() < 2 || right.degree() < 1) return std::nullopt;
    const unsigned k = static_cast<unsigned>(left.degree());
    const Poly shifted = right - Poly::constant(pf->center);
    const int dq = shifted.degree();
    std::vector<Rat> translations{0};
    const Rat centring = shifted.coeff(dq - 1) / (shifted.lead() * dq);
    if (centring != 0) translations.push_back(centring);

    for (const Rat& t : translations) {
        const Poly rr = compose(shifted, Poly::linear(1, -t));  // shifted = rr o (z + t)
        int s = 0;
        while (rr.coeff(s) == 0) ++s;
        bool periodic = true;
        for (int e = s; e <= rr.degree(); ++e)
            if (rr.coeff(e) != 0 && (e - s) % static_cast<int>(r) != 0) periodic = false;
        if (!periodic || (static_cast<unsigned long>(k) * s) % r != 0) continue;
        std::vector<Rat> hc;
        for (int e = s; e <= rr.degree(); e += static_cast<int>(r)) hc.push_back(rr.coeff(e));
        const Poly h(std::move(hc));
        const unsigned prefix = static_cast<unsigned>(k * s / r);
        Poly new_left = Poly::monomial(pf->scale, prefix) * h.pow(k) + Poly::constant(pf->offset);
        Poly new_right = Poly::linear(1, t).pow(r);
        return std::make_pair(std::move(new_left), std::move(new_right));
    }
    return std::nullopt;
}

}  // namespace

Decomposition ritt_move(const Decomposition& d, const RittMoveSpec& spec) {
    if (const auto* ins = std::get_if<AffineInsert>(&spec)) {
        require_pair(d, ins->position);
        if (!ins->map.is_affine()) throw MoveNotApplicable("AffineInsert requires an affine map (c = 0)");
        const Poly a = ins->map.as_poly();
        const Poly ainv = ins->map.inverse().as_poly();
        return replace_pair(d, ins->position, compose(d.factors[ins->position], a),
                            compose(ainv, d.factors[ins->position + 1]));
    }

    if (const auto* sw = std::get_if<ChebyshevSwap>(&spec)) {
        require_pair(d, sw->position);
        const Poly& p = d.factors[sw->position];
        const Poly& q = d.factors[sw->position + 1];
        const int a = p.degree(), b = q.degree();
        if (a < 2 || b < 2) throw MoveNotApplicable("ChebyshevSwap needs factors of degree >= 2");
        if (a == b) throw MoveNotApplicable("ChebyshevSwap of equal degrees is trivial");
        if (p == chebyshev(static_cast<unsigned>(a)) && q == chebyshev(static_cast<unsigned>(b)))
            return replace_pair(d, sw->position, q, p);
        const Poly w = compose(p, q);
        if (!is_chebyshev_like(w))
            throw MoveNotApplicable("pair is not a Chebyshev polynomial up to affine maps");
        auto rf = right_factor(w, static_cast<unsigned>(a));
        if (!rf) throw MoveNotApplicable("swapped Chebyshev factorization not found");
        return replace_pair(d, sw->position, rf->left, rf->right);
    }

    const auto& mx = std::get<MonomialExchange>(spec);
    require_pair(d, mx.position);
    if (mx.r < 2) throw MoveNotApplicable("MonomialExchange requires r >= 2");
    const Poly& p = d.factors[mx.position];
    const Poly& q = d.factors[mx.position + 1];
    const std::string before = pair_key(p, q);

    if (auto fwd = monomial_forward(p, q, mx.r)) {
        if (pair_key(fwd->first, fwd->second) != before)
            return replace_pair(d, mx.position, fwd->first, fwd->second);
    }
    // Inverse direction: (L, ~z^r) -> (~z^k, z^s h(z^r)).
    if (q.degree() == static_cast<int>(mx.r) && power_form(q) && p.degree() >= 1) {
        const Poly w = compose(p, q);
        const unsigned n = static_cast<unsigned>(w.degree());
        for (unsigned k : divisors(n)) {
            if (k < 2 || k == n) continue;
            auto rf = right_factor(w, n / k);
            if (!rf || !power_form(rf->left)) continue;
            auto back = monomial_forward(rf->left, rf->right, mx.r);
            if (!back || pair_key(back->first, back->second) != before) continue;
            if (pair_key(rf->left, rf->right) == before) continue;
            return replace_pair(d, mx.position, rf->left, rf->right);
        }
    }
    throw MoveNotApplicable("no monomial exchange with r=" + std::to_string(mx.r) + " at position " +
                            std::to_string(mx.position));
}

std::vector<Decomposition> ritt_neighbors(const Decomposition& d) {
    const std::string self = to_string(canonical_form(d));
    std::map<std::string, Decomposition> found;
    auto attempt = [&](const RittMoveSpec& spec) {
        try {
            Decomposition next = canonical_form(ritt_move(d, spec));
            std::string key = to_string(next);
            if (key != self) found.emplace(std::move(key), std::move(next));
        } catch (const MoveNotApplicable&) {
        }
    };
    for (std::size_t pos = 0; pos + 1 < d.factors.size(); ++pos) {
        attempt(ChebyshevSwap{pos});
        const int deg = d.factors[pos].degree() * d.factors[pos + 1].degree();
        if (deg < 1) continue;
        for (unsigned r : divisors(static_cast<unsigned>(deg)))
            if (r >= 2) attempt(MonomialExchange{pos, r});
    }
    std::vector<Decomposition> out;
    for (auto& [_, n] : found) out.push_back(std::move(n));
    return out;
}

bool decompositions_equivalent(const Decomposition& d1, const Decomposition& d2, EquivalenceMode mode,
                               std::size_t budget) {
    if (d1.value() != d2.value())
        throw PreconditionError("decompositions_equivalent: inputs compose to different polynomials");
    const Decomposition c1 = canonical_form(d1);
    const std::string target = to_string(canonical_form(d2));
    if (mode == EquivalenceMode::Affine) return to_string(c1) == target;

    std::set<std::string> seen{to_string(c1)};
    std::deque<Decomposition> queue{c1};
    std::size_t expanded = 0;
    while (!queue.empty()) {
        if (expanded >= budget)
            throw BudgetExhausted("ritt search exhausted its budget of " + std::to_string(budget) + " nodes");
        Decomposition cur = std::move(queue.front());
        queue.pop_front();
        if (to_string(cur) == target) return true;
        ++expanded;
        for (auto& next : ritt_neighbors(cur)) {
            std::string key = to_string(next);
            if (seen.insert(key).second) queue.push_back(std::move(next));
        }
    }
    return false;
}

}  // namespace ritt
