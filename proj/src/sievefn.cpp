#include "sievecalc/sievefn.hpp"

#include <cmath>

#include "sievecalc/buchstab.hpp"
#include "sievecalc/primes.hpp"

namespace sievecalc {

double mertens_product(double z) {
  if (!(z >= 2)) throw Error(Errc::domain, "mertens_product needs z >= 2");
  const auto primes = primes_up_to(static_cast<uint64_t>(std::ceil(z)));
  double prod = 1.0;
  for (uint64_t p : primes) {
    if (static_cast<double>(p) >= z) break;
    prod *= 1.0 - 1.0 / static_cast<double>(p);
  }
  return prod;
}

double linear_sieve_F(double s) {
  if (!(s >= 1.0 && s <= 3.0)) throw Error(Errc::domain, "F(s) implemented on [1, 3]");
  const double exp_gamma = 1.0 / kExpMinusEulerGamma;
  return 2.0 * exp_gamma / s;
}

}  // namespace sievecalc
