#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace lrecon {

using Integer = mpz_class;
using Rational = mpq_class;

// Primes <= n, ascending.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

// Smallest prime factor table for 0..n (entries 0 and 1 are 0).
inline std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  return spf;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // Miller-Rabin with a base set that is deterministic below 2^64.
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
      if (e & 1) r = mulmod(r, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
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

// p-adic valuation; the valuation of zero is reported as -1.
inline long valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) return -1;
  Integer m = abs(n);
  long v = 0;
  const Integer pp(static_cast<unsigned long>(p));
  while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
    m /= pp;
    ++v;
  }
  return v;
}

inline std::uint64_t mod_u64(const Integer& n, std::uint64_t p) {
  Integer r = n % Integer(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Positive divisors of |n| by trial division; n must be nonzero.
inline std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      Integer q = m / d;
      if (q != d) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace lrecon
