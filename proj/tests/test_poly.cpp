#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "torsion/poly.hpp"
#include "torsion/search.hpp"

using namespace torsion;

namespace {

IntPolynomial x(int i, int n) { return IntPolynomial::variable(i, n); }

}  // namespace

TEST_CASE("ring arithmetic basics") {
  const int n = 3;
  const auto p = x(1, n) + x(2, n);
  CHECK(p * p == x(1, n).pow(2) + BigInt(2) * x(1, n) * x(2, n) + x(2, n).pow(2));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 1);
  CHECK(p.paper_degree() == 2);
  CHECK((x(1, n).pow(3) * x(3, n)).degree() == 4);
  CHECK((p + IntPolynomial::one(n)).is_homogeneous() == false);
}

TEST_CASE("permutation action substitutes x_i -> x_{w(i)}") {
  const int n = 4;
  const Permutation w({3, 1, 4, 2});
  for (int i = 1; i <= n; ++i) CHECK(act(w, x(i, n)) == x(w(i), n));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto f = oracle::random_polynomial(rng, n, 3, 4);
    const auto u = oracle::random_permutation(rng, n), v = oracle::random_permutation(rng, n);
    REQUIRE(act(u * v, f) == act(u, act(v, f)));
  }
}

TEST_CASE("divided difference matches long division, n <= 6") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto f = oracle::random_polynomial(rng, n, 4, 1 + rng() % 6);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    REQUIRE(divided_difference(i, f) == oracle::divided_difference_by_division(i, f));
  }
}

TEST_CASE("divided difference identities on random polynomials") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto f = oracle::random_polynomial(rng, n, 3, 4);
    const auto g = oracle::random_polynomial(rng, n, 3, 4);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const Permutation s = Permutation::simple(i, n);
    REQUIRE(divided_difference(i, divided_difference(i, f)).is_zero());
    REQUIRE(divided_difference(i, f * g) ==
            divided_difference(i, f) * g + act(s, f) * divided_difference(i, g));
    // symmetric polynomials in x_i, x_{i+1} are constants for d_i
    const auto sym = f + act(s, f);
    REQUIRE(divided_difference(i, sym * g) == sym * divided_difference(i, g));
    if (i + 1 < n) {
      REQUIRE(divided_difference(i, divided_difference(i + 1, divided_difference(i, f))) ==
              divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, f))));
    }
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) >= 2)
        REQUIRE(divided_difference(i, divided_difference(j, f)) ==
                divided_difference(j, divided_difference(i, f)));
  }
}

TEST_CASE("divided difference of a monomial") {
  const int n = 3;
  CHECK(divided_difference(1, x(1, n)) == IntPolynomial::one(n));
  CHECK(divided_difference(1, x(2, n)) == -IntPolynomial::one(n));
  CHECK(divided_difference(1, x(1, n).pow(3)) ==
        x(1, n).pow(2) + x(1, n) * x(2, n) + x(2, n).pow(2));
  CHECK(divided_difference(2, x(1, n)).is_zero());
}

TEST_CASE("Demazure operator d_w is independent of the reduced word") {
  std::mt19937_64 rng(4);
  for (const auto& w : all_permutations(4)) {
    const auto f = oracle::random_polynomial(rng, 4, 4, 5);
    const auto expected = demazure(some_reduced_word(w), f);
    for (const auto& rw : reduced_words(w)) REQUIRE(demazure(rw, f) == expected);
  }
  CHECK_THROWS_AS(demazure(Word(3, {1, 1}), x(1, 3)), InvalidInput);
}

TEST_CASE("d_{w_0} of the staircase monomial is 1") {
  for (int n = 2; n <= 6; ++n) {
    Exponents e(n, 0);
    for (int i = 1; i <= n; ++i) e[i - 1] = static_cast<std::uint16_t>(n - i);
    CHECK(demazure(longest_permutation(n), IntPolynomial::monomial(e, 1)) ==
          IntPolynomial::one(n));
  }
}

TEST_CASE("operator word value: small examples") {
  // d_1(x_1) = 1, d_1(x_2) = -1 via b
  CHECK(operator_word_value(OperatorData{2, {{Permutation::simple(1, 2), 1, 0}}}) == 1);
  CHECK(operator_word_value(OperatorData{2, {{Permutation::simple(1, 2), 0, 1}}}) == -1);
  // d_1 d_2 d_1 (x_1^2 x_3) = d_1 d_2 ((x_1 + x_2) x_3) = d_1(-x_1) = -1
  CHECK(operator_word_value(OperatorData{3, {{longest_permutation(3), 2, 1}}}) == -1);
  // x_1^3 lies in the ideal of symmetric polynomials
  CHECK(operator_word_value(OperatorData{3, {{longest_permutation(3), 3, 0}}}) == 0);
  CHECK(operator_word_value(OperatorData{3, {{longest_permutation(3), 0, 3}}}) == 0);
  CHECK_THROWS_AS(operator_word_value(OperatorData{3, {{longest_permutation(3), 1, 0}}}),
                  InvalidInput);
}

TEST_CASE("operator word value matches an independent step-by-step evaluation") {
  // Fibonacci family d_1 F^i (x_1), evaluated with the division oracle.
  for (int i = 1; i <= 8; ++i) {
    const int n = 4;
    auto d = [&](int k, const IntPolynomial& f) {
      return oracle::divided_difference_by_division(k, f);
    };
    IntPolynomial h = x(1, n);
    for (int k = 0; k < i; ++k) {
      h = d(1, x(1, n) * h);
      h = d(2, d(3, x(4, n).pow(2) * h));
    }
    h = d(1, h);
    REQUIRE(h.is_constant());
    REQUIRE(operator_word_value(fibonacci_data(i)) == h.constant_term());
    REQUIRE(h.constant_term() == oracle::fib(i + 1));
  }
}
