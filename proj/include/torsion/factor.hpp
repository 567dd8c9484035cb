#ifndef TORSION_FACTOR_HPP
#define TORSION_FACTOR_HPP

// Integer factorisation for reading torsion primes off certified values:
// trial division, Miller-Rabin and Brent's variant of Pollard rho.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>

#include "torsion/bigint.hpp"
#include "torsion/errors.hpp"

namespace torsion {

struct Factorization {
  std::vector<BigInt> primes;      // sorted, with multiplicity
  std::vector<BigInt> composites;  // cofactors left unsplit when effort ran out

  bool complete() const { return composites.empty(); }

  std::vector<BigInt> distinct_primes() const {
    std::vector<BigInt> r = primes;
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  }

  BigInt largest_prime() const { return primes.empty() ? BigInt(0) : primes.back(); }
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 10000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (std::uint32_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these bases.
inline bool is_prime64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline u64 gcd64(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle finding; returns a nontrivial factor or 0.
inline u64 rho64(u64 n, u64 c, std::uint64_t max_iter) {
  if (n % 2 == 0) return 2;
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  const u64 m = 128;
  std::uint64_t r = 1, iter = 0;
  auto f = [&](u64 v) { return (mulmod64(v, v, n) + c) % n; };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min<std::uint64_t>(m, r - k); ++i) {
        y = f(y);
        q = mulmod64(q, x > y ? x - y : y - x, n);
      }
      g = gcd64(q, n);
      k += m;
      iter += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1 && iter < max_iter);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return (g == 1 || g == n) ? 0 : g;
}

inline BigInt rho_big(const BigInt& n, const BigInt& c, std::uint64_t max_iter) {
  BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
  const std::uint64_t m = 128;
  std::uint64_t r = 1, iter = 0;
  auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min<std::uint64_t>(m, r - k); ++i) {
        y = f(y);
        q = (q * abs_value(BigInt(x - y))) % n;
      }
      g = boost::multiprecision::gcd(q, n);
      k += m;
      iter += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1 && iter < max_iter);
  if (g == n) {
    do {
      ys = f(ys);
      g = boost::multiprecision::gcd(abs_value(BigInt(x - ys)), n);
    } while (g == 1);
  }
  return (g == 1 || g == n) ? BigInt(0) : g;
}

}  // namespace detail

// Deterministic below 2^64; above that a 25-round Miller-Rabin test.
inline bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return detail::is_prime64(static_cast<std::uint64_t>(n));
  for (auto p : detail::small_primes())
    if (n % p == 0) return false;
  return boost::multiprecision::miller_rabin_test(n, 25);
}

// Effort is the iteration budget of each rho attempt.
inline Factorization factorize(const BigInt& value, std::uint64_t effort = 1ULL << 22) {
  detail::require(value != 0, "cannot factor zero");
  Factorization out;
  BigInt n = abs_value(value);
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    auto m = static_cast<std::uint64_t>(n);
    for (std::uint64_t p : detail::small_primes()) {
      if (p * p > m) break;
      while (m % p == 0) {
        out.primes.emplace_back(p);
        m /= p;
      }
    }
    n = m;
  } else {
    for (auto p : detail::small_primes()) {
      if (BigInt(p) * p > n) break;
      while (n % p == 0) {
        out.primes.emplace_back(p);
        n /= p;
      }
    }
  }
  std::vector<BigInt> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    BigInt m = stack.back();
    stack.pop_back();
    if (is_probable_prime(m)) {
      out.primes.push_back(m);
      continue;
    }
    BigInt d = 0;
    for (unsigned c = 1; c <= 8 && d == 0; ++c) {
      if (m <= std::numeric_limits<std::uint64_t>::max())
        d = BigInt(detail::rho64(static_cast<std::uint64_t>(m), c, effort));
      else
        d = detail::rho_big(m, BigInt(c), effort);
    }
    if (d == 0) {
      out.composites.push_back(m);
      continue;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
  std::sort(out.primes.begin(), out.primes.end());
  std::sort(out.composites.begin(), out.composites.end());
  return out;
}

}  // namespace torsion

#endif  // TORSION_FACTOR_HPP
