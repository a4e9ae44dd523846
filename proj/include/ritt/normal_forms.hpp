#pragma once

// Normal forms of polynomials under the rational affine group.

#include "ritt/algebra.hpp"

namespace ritt {

struct ConjugacyNormal {
    Poly canonical;     // conjugate(f, conjugator)
    Moebius conjugator; // affine
};

/// Affine conjugation over Q to centred form (no z^{d-1} term) whose leading
/// coefficient is reduced modulo (d-1)-th powers (positive when d-1 is odd).
/// When a sign ambiguity remains, the highest even-degree non-leading
/// coefficient is made positive. deg f >= 2.
ConjugacyNormal conjugacy_canonical(const Poly& f);

/// True iff f = mu o g o lambda for affine mu, lambda over C.
bool affine_equivalent(const Poly& f, const Poly& g);

}  // namespace ritt
