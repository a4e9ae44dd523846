#pragma once

// Small number-theoretic helpers on GMP integers.

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "ritt/algebra.hpp"

namespace ritt {

/// Divisors of n in ascending order (n >= 1).
std::vector<unsigned> divisors(unsigned n);

/// Prime factorization of |n| (n != 0), ascending primes.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

std::optional<Rat> rational_sqrt(const Rat& r);

/// Writes |r| = residue * root^e where every prime exponent of residue lies in
/// [0, e). Both parts are positive. r != 0, e >= 1.
struct PowerSplit {
    Rat residue;
    Rat root;
};
PowerSplit split_power(const Rat& r, unsigned e);

/// r^e for a possibly negative exponent (r != 0 when e < 0).
Rat rat_pow(const Rat& r, long e);

}  // namespace ritt
