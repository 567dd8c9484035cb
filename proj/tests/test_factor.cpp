#include <catch_amalgamated.hpp>

#include <random>

#include "torsion/factor.hpp"

using namespace torsion;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt product(const std::vector<BigInt>& v) {
  BigInt p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

}  // namespace

TEST_CASE("small values") {
  CHECK(factorize(89).primes == std::vector<BigInt>{89});
  CHECK(factorize(34).primes == std::vector<BigInt>{2, 17});
  CHECK(factorize(-12).primes == std::vector<BigInt>{2, 2, 3});
  CHECK(factorize(1).primes.empty());
  CHECK(factorize(470858183).complete());
  CHECK(product(factorize(470858183).primes) == 470858183);
  CHECK_THROWS_AS(factorize(0), InvalidInput);
}

TEST_CASE("primality agrees with trial division below 10^5") {
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_probable_prime(BigInt(n)) == naive_prime(n));
}

TEST_CASE("factorisations multiply back and contain only primes") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 300; ++t) {
    BigInt n = 1;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) n *= BigInt(rng() % 4000000000ULL + 2);
    const auto f = factorize(n);
    REQUIRE(f.complete());
    REQUIRE(product(f.primes) == n);
    for (const auto& p : f.primes) REQUIRE(is_probable_prime(p));
    REQUIRE(std::is_sorted(f.primes.begin(), f.primes.end()));
  }
}

TEST_CASE("semiprimes above 2^64") {
  const BigInt p("18446744073709551557"), q("1000000007");
  const auto f = factorize(p * q);
  CHECK(f.primes == std::vector<BigInt>{q, p});
  CHECK(is_probable_prime(p));
  CHECK_FALSE(is_probable_prime(p * q));
}

TEST_CASE("low effort leaves composites unsplit") {
  const BigInt p("4294967311"), q("4294967357");
  const auto f = factorize(p * q, 1);
  CHECK((f.complete() ? product(f.primes) : product(f.primes) * product(f.composites)) == p * q);
}
