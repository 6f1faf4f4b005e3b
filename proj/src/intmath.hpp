#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace primfield {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Cap on exhaustive walks (vectors of F_q^n, subspace lists, scan budgets).
inline constexpr u64 kDefaultEnumLimit = u64(1) << 20;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 acc = 1;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// base^exp if it stays <= cap, otherwise nullopt.
inline std::optional<u64> checked_pow_u64(u64 base, unsigned exp, u64 cap) {
  u64 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > cap / base) return std::nullopt;
    acc *= base;
    if (acc > cap) return std::nullopt;
  }
  return acc;
}

inline std::vector<u64> divisors_of(u64 n) {
  std::vector<u64> low, high;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline unsigned divisor_count(u64 n) { return static_cast<unsigned>(divisors_of(n).size()); }

inline std::vector<u64> proper_divisors(u64 n) {
  auto d = divisors_of(n);
  if (!d.empty()) d.pop_back();
  return d;
}

inline u64 smallest_prime_factor(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Largest dimensions of proper subfields: n/l over the distinct primes l | n.
inline std::vector<u64> maximal_proper_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 l : distinct_prime_factors(n)) out.push_back(n / l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// q = p^r with p prime, r >= 1, or nullopt.
inline std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
  if (q < 2) return std::nullopt;
  u64 p = smallest_prime_factor(q);
  unsigned r = 0;
  u64 m = q;
  while (m % p == 0) { m /= p; ++r; }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, r);
}

}  // namespace primfield
