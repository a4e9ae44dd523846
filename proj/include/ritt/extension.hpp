#pragma once

// Extension of characters from an ideal of the composition semigroup, and
// reports for identities that obstruct extension to rational maps.

#include <functional>
#include <string>
#include <vector>

#include "ritt/algebra.hpp"
#include "ritt/characters.hpp"
#include "ritt/report.hpp"

namespace ritt {

enum class Membership { Yes, No, Unknown };

struct IdealPredicate {
    std::string name;
    std::function<Membership(const RatFunc&)> contains;
};

/// Decomposable maps. Decided for polynomials and for rational maps of
/// prime degree (never decomposable); Unknown otherwise.
IdealPredicate decomposable_ideal();

/// Maps with prime decompositions of different lengths. Polynomials are
/// never members; rational maps are members only when they are a catalog
/// identity with chains of different lengths.
IdealPredicate ritt_ideal();

/// Character given on polynomials.
using PolyCharacter = std::function<CharValue(const Poly&)>;
PolyCharacter as_poly_character(const Character& c);

struct WitnessEvaluation {
    Poly witness;
    CharValue right;  // phi(R o Q) / phi(Q)
    CharValue left;   // phi(Q o R) / phi(Q)
};

struct ExtensionResult {
    CharValue value;
    std::vector<WitnessEvaluation> audit;
};

/// phi(R o Q) / phi(Q) for the first witness, after checking that every
/// witness gives the same value from both sides.
/// Errors: UndecidedMembership, PreconditionError (membership the wrong way
/// round), ZeroWitness, WitnessDisagreement.
ExtensionResult extend_over_ideal(const PolyCharacter& phi, const IdealPredicate& ideal, const Poly& r,
                                  const std::vector<Poly>& witnesses);

/// phi(R^3) / phi(R^2) with powers under composition, after checking
/// phi(R^2)^3 = phi(R^3)^2. Errors: UndecidedMembership, PreconditionError,
/// ZeroDenominator, ConsistencyFailure.
CharValue extend_by_square(const PolyCharacter& phi, const IdealPredicate& ideal, const Poly& r);

enum class Verdict { Contradiction, NoContradiction, FixtureUnverified };
std::string to_string(Verdict v);

struct ObstructionReport {
    std::string id;
    std::string identity;     // "lhs = rhs" as text
    bool identity_verified = false;
    CharValue left, right;    // character values of the two sides
    Verdict verdict = Verdict::NoContradiction;
    std::vector<std::string> steps;
    std::vector<Check> checks;
};

/// Ids: length-bergweiler, phi1-chebyshev(p) with p an odd prime,
/// phi2-s4. Throws UnknownFixture for anything else.
ObstructionReport obstruction_report(const std::string& id);

}  // namespace ritt
