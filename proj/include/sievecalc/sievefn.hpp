#pragma once

#include "sievecalc/errors.hpp"

namespace sievecalc {

// Product over primes p < z of (1 - 1/p); empty product (z <= 2) is 1.
double mertens_product(double z);

// Rosser-Iwaniec upper-bound function F(s) = 2 e^gamma / s on [1, 3].
// DOMAIN outside; accurate to 1e-12.
double linear_sieve_F(double s);

}  // namespace sievecalc
