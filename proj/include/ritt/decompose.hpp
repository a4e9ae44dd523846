#pragma once

// Functional decomposition of polynomials over Q: right factors of a given
// degree, prime decompositions, Ritt moves and decomposition equivalence.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ritt/algebra.hpp"

namespace ritt {

/// Ordered factors, outermost first: value = factors[0] o factors[1] o ...
struct Decomposition {
    std::vector<Poly> factors;

    std::size_t length() const noexcept { return factors.size(); }
    Poly value() const { return compose_chain(factors); }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Factors joined by " . ", each in canonical polynomial text.
std::string to_string(const Decomposition& d);

struct RightFactor {
    Poly left;   // g
    Poly right;  // h, monic with h(0) = 0
};

/// Solves f = g o h with deg h = m, h monic and h(0) = 0. Returns nullopt
/// when no such factorization exists; throws DegreeError unless
/// deg f >= 2, m | deg f and 1 < m < deg f.
std::optional<RightFactor> right_factor(const Poly& f, unsigned m);

bool is_prime(const Poly& f);

/// Affine normalization f = a * f~ + b with f~ monic and f~(0) = 0.
struct LeftNormal {
    Poly normalized;
    Rat scale;
    Rat shift;
};
LeftNormal left_normalize(const Poly& f);

/// Canonical representative of the affine-insertion class: every inner
/// factor monic with zero constant term, the outermost absorbs the residue.
Decomposition canonical_form(const Decomposition& d);

/// All prime decompositions of f (deg f >= 2) in canonical form, sorted by
/// their canonical text.
std::vector<Decomposition> complete_decompositions(const Poly& f);

/// One prime decomposition in canonical form, found greedily; cheaper than
/// full enumeration.
Decomposition prime_decomposition(const Poly& f);

/// Common length of the prime decompositions; LengthDisagreement otherwise.
std::size_t decomposition_length(const Poly& f);

// ---------------------------------------------------------------- Ritt moves

struct AffineInsert {
    std::size_t position;
    Moebius map;  // must be affine
};
struct ChebyshevSwap {
    std::size_t position;
};
struct MonomialExchange {
    std::size_t position;
    unsigned r;
};
using RittMoveSpec = std::variant<AffineInsert, ChebyshevSwap, MonomialExchange>;

std::string to_string(const RittMoveSpec& spec);

/// Applies one Ritt transformation at an adjacent pair (position, position+1).
/// The composed value is preserved exactly. Throws MoveNotApplicable.
///
/// ChebyshevSwap accepts any pair whose product is a Chebyshev polynomial up to
/// affine maps on both sides; literal (T_a, T_b) pairs come back as (T_b, T_a).
/// MonomialExchange(r) rewrites (a(z-b)^k + c) o z^s h(z^r) into
/// (a z^{ks/r} h(z)^k + c) o z^r (allowing a translation on the right factor),
/// or performs the inverse rewrite when the right factor has degree r.
Decomposition ritt_move(const Decomposition& d, const RittMoveSpec& spec);

/// True iff f = mu o T_n o lambda for affine mu, lambda over C (n = deg f >= 1).
bool is_chebyshev_like(const Poly& f);

enum class EquivalenceMode { Affine, Ritt };

/// Affine mode compares canonical forms. Ritt mode runs a breadth-first
/// search over canonical decompositions; BudgetExhausted is thrown when the
/// node budget runs out before the search space is exhausted.
bool decompositions_equivalent(const Decomposition& d1, const Decomposition& d2, EquivalenceMode mode,
                               std::size_t budget = 10000);

/// Canonical decompositions reachable by a single applicable move.
std::vector<Decomposition> ritt_neighbors(const Decomposition& d);

}  // namespace ritt
