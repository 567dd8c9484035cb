#include <catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "torsion/factor.hpp"
#include "torsion/zaremba.hpp"

using namespace torsion;

namespace {

// n is a top-left entry of Gamma_A iff some m/n... concretely iff n/m has a
// continued fraction [a_1; a_2, ..., a_{2k}] of even length with all
// partial quotients in 1..A, for some 1 <= m < n coprime to n. Each rational
// has exactly two expansions, one ending in 1.
std::vector<std::uint64_t> continued_fraction_oracle(int A, std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    bool ok = false;
    for (std::uint64_t m = 1; m < n && !ok; ++m) {
      if (std::gcd(n, m) != 1) continue;
      std::vector<std::uint64_t> cf;
      std::uint64_t p = n, q = m;
      while (q != 0) {
        cf.push_back(p / q);
        p %= q;
        std::swap(p, q);
      }
      auto fits = [&](const std::vector<std::uint64_t>& v) {
        if (v.size() % 2 != 0) return false;
        for (auto x : v)
          if (x < 1 || x > static_cast<std::uint64_t>(A)) return false;
        return true;
      };
      std::vector<std::uint64_t> alt = cf;
      if (alt.back() > 1) {
        alt.back() -= 1;
        alt.push_back(1);
      } else {
        alt.pop_back();
        alt.back() += 1;
      }
      ok = fits(cf) || fits(alt);
    }
    if (ok) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("Gamma products") {
  CHECK(gamma_product("") == BigMat2::identity());
  CHECK(gamma_product("LR") == BigMat2{2, 1, 1, 1});
  std::string w;
  for (int k = 1; k <= 30; ++k) {
    w += "LR";
    REQUIRE(gamma_product(w).m11 == oracle::fib(2 * k + 1));
    REQUIRE(gamma_product(w).det() == 1);
  }
  CHECK_THROWS_AS(gamma_product("LQ"), InvalidInput);
}

TEST_CASE("Gamma_A generators") {
  CHECK(gamma_a_generator(1, 1, 5) == BigMat2{2, 1, 1, 1});
  CHECK(gamma_a_generator(5, 5, 5) == BigMat2{26, 5, 5, 1});
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const auto g = gamma_a_generator(a, b, 5);
      REQUIRE(g == gamma_product(std::string(a, 'L') + std::string(b, 'R')));
    }
  CHECK_THROWS_AS(gamma_a_generator(6, 1, 5), InvalidInput);
}

TEST_CASE("word conversion length bound") {
  const PairWord w{{3, 5}, {1, 2}, {5, 5}};
  const std::string g = to_gamma_word(w);
  CHECK(g.size() <= 2 * 5 * w.size());
  CHECK(gamma_product(g) == gamma_a_product(w, 5));
}

TEST_CASE("representable sets against the continued fraction oracle") {
  for (int A = 1; A <= 3; ++A) {
    const auto oracle_set = continued_fraction_oracle(A, 1500);
    REQUIRE(representable_set(A, 1500) == oracle_set);
    REQUIRE(representable_set(A, 1500, 4) == oracle_set);
  }
  CHECK(representable_set(1, 100) == std::vector<std::uint64_t>{2, 5, 13, 34, 89});
  CHECK(representable_set(5, 10) == continued_fraction_oracle(5, 10));
}

TEST_CASE("continuant DFS equals matrix BFS, A <= 5, N <= 10^4") {
  for (int A = 1; A <= 5; ++A) {
    BfsStats stats;
    const auto bfs = representable_set_bfs(A, 10000, &stats);
    REQUIRE(representable_set(A, 10000, 2) == bfs);
  }
}

TEST_CASE("density") {
  CHECK(density(1, 100).density() == Rational(5, 100));
  for (int A = 1; A < 5; ++A) CHECK(density(A + 1, 2000).count >= density(A, 2000).count);
  CHECK(density(5, 10000).count == density(5, 10000, 3).count);
}

TEST_CASE("prime records") {
  CHECK(prime_records(1, Rational(1, 100), 100).primes == std::vector<std::uint64_t>{2, 5, 13, 89});
  CHECK(prime_records(5, Rational(1, 2), 1).primes.empty());
  const auto r = prime_records(3, Rational(1, 2), 3000);
  std::vector<std::uint64_t> expect;
  for (auto n : continued_fraction_oracle(3, 3000))
    if (2 * n > 3000 && is_probable_prime(BigInt(n))) expect.push_back(n);
  CHECK(r.primes == expect);
  CHECK_THROWS_AS(prime_records(5, Rational(1), 100), InvalidInput);
}

TEST_CASE("norm bound") {
  PairWord ones;
  for (int k = 1; k <= 20; ++k) {
    ones.push_back({1, 1});
    REQUIRE(gamma_a_product(ones, 1).m11 == oracle::fib(2 * k + 1));
    REQUIRE(norm_bound_check(ones, 1));
  }
  CHECK(norm_bound_check({{5, 5}}, 5));
  const auto scan = norm_bound_scan(5, 4);
  CHECK(scan.words == 25 + 625 + 15625 + 390625);
  CHECK(scan.violations == 0);
  CHECK(scan.equalities == 4);
}

namespace {

// Prime top-left entries in (lower, upper] over all Gamma_5 words with
// l_A <= max_len.
std::set<BigInt> admissible_primes(const BigInt& lower, const BigInt& upper, int max_len) {
  std::set<BigInt> out;
  std::vector<BigMat2> frontier{BigMat2::identity()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<BigMat2> next;
    for (const auto& g : frontier)
      for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
          const auto h = g * gamma_a_generator(a, b, 5);
          if (h.m11 > upper) continue;
          next.push_back(h);
          if (h.m11 > lower && is_probable_prime(h.m11)) out.insert(h.m11);
        }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("growth witness against exhaustive enumeration, L <= 45") {
  for (int L = 11; L <= 45; ++L) {
    const auto w = growth_witness(L);
    INFO("L = " << L);
    REQUIRE(is_probable_prime(w.p));
    REQUIRE(w.gamma.m11 == w.p);
    REQUIRE(gamma_product(w.word) == w.gamma);
    REQUIRE(w.length <= L);
    REQUIRE(w.length_a <= L / 10);
    REQUIRE(static_cast<int>(w.word.size()) == w.length);
    const BigInt lower(w.lower), upper(w.upper);
    REQUIRE(w.p > lower);
    REQUIRE(w.p <= upper);
    REQUIRE(admissible_primes(lower, upper, L / 10).count(w.p) == 1);
  }
  CHECK(growth_witness(40).p == 29);
  CHECK_THROWS_AS(growth_witness(10), ResourceLimit);
  CHECK_THROWS_AS(growth_witness(2), InvalidInput);
}

TEST_CASE("torsion bridge") {
  const auto one = torsion_bridge("L");
  CHECK(one.N == 8);
  for (const auto& e : one.entries) CHECK(abs_value(e.certificate.value) == 1);
  const auto two = torsion_bridge("LR");
  CHECK(two.gamma == BigMat2{2, 1, 1, 1});
  CHECK(two.entries.size() == 4);
  for (const auto& e : two.entries)
    CHECK(abs_value(e.certificate.value) == abs_value(two.gamma.at(e.row, e.col)));
  for (int len = 1; len <= 5; ++len)
    for (int m = 0; m < (1 << len); ++m) {
      std::string w;
      for (int k = 0; k < len; ++k) w += (m >> k) & 1 ? 'R' : 'L';
      const auto rep = torsion_bridge(w);
      for (const auto& e : rep.entries) {
        REQUIRE(e.certificate.N == 3 * len + 5);
        for (const auto& p : factorize(rep.gamma.at(e.row, e.col)).primes)
          REQUIRE(e.certificate.value % p == 0);
      }
    }
  CHECK_THROWS_AS(torsion_bridge(""), InvalidInput);
  CHECK_THROWS_AS(torsion_bridge("LU"), InvalidInput);
}
