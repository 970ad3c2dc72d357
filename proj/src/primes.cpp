#include "sievecalc/primes.hpp"

#include <algorithm>
#include <cmath>

namespace sievecalc {

std::vector<uint64_t> primes_up_to(uint64_t limit) {
  std::vector<uint64_t> primes;
  if (limit < 2) return primes;
  const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;

  std::vector<char> small(root + 1, 1);
  small[0] = small[1] = 0;
  for (uint64_t i = 2; i * i <= root; ++i)
    if (small[i])
      for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  std::vector<uint64_t> base;
  for (uint64_t i = 2; i <= root; ++i)
    if (small[i]) base.push_back(i);

  const uint64_t segment = 1 << 18;
  std::vector<char> sieve(segment);
  for (uint64_t low = 2; low <= limit; low += segment) {
    const uint64_t high = std::min(low + segment - 1, limit);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (uint64_t p : base) {
      if (p * p > high) break;
      uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (uint64_t j = start; j <= high; j += p) sieve[j - low] = 0;
    }
    for (uint64_t v = low; v <= high; ++v)
      if (sieve[v - low] && v >= 2) primes.push_back(v);
  }
  return primes;
}

std::vector<uint32_t> spf_table(uint32_t limit) {
  std::vector<uint32_t> spf(static_cast<size_t>(limit) + 1, 0);
  for (uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (uint64_t j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace sievecalc
