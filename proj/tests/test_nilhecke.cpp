#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "torsion/nilhecke.hpp"

using namespace torsion;

namespace {

NilHeckeElement D(int i, int n) { return d_of(Permutation::simple(i, n)); }

NilHeckeElement poly(const IntPolynomial& f) { return NilHeckeElement::from_poly(f); }

NilHeckeElement random_element(std::mt19937_64& rng, int n) {
  NilHeckeElement e(n);
  for (const auto& w : all_permutations(n))
    if (rng() % 3 == 0) e.add_term(w, oracle::random_polynomial(rng, n, 2, 2));
  return e;
}

}  // namespace

TEST_CASE("defining relations") {
  const int n = 4;
  for (int i = 1; i < n; ++i) {
    CHECK((D(i, n) * D(i, n)).is_zero());
    if (i + 1 < n) CHECK(D(i, n) * D(i + 1, n) * D(i, n) == D(i + 1, n) * D(i, n) * D(i + 1, n));
    for (int j = i + 2; j < n; ++j) CHECK(D(i, n) * D(j, n) == D(j, n) * D(i, n));
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto f = oracle::random_polynomial(rng, n, 3, 4);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const auto lhs = D(i, n) * poly(f);
    const auto rhs = poly(act(Permutation::simple(i, n), f)) * D(i, n) + poly(divided_difference(i, f));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("D_u D_v = D_{uv} when lengths add, else 0") {
  const int n = 4;
  for (const auto& u : all_permutations(n))
    for (const auto& v : all_permutations(n)) {
      const auto prod = d_of(u) * d_of(v);
      if ((u * v).length() == u.length() + v.length())
        REQUIRE(prod == d_of(u * v));
      else
        REQUIRE(prod.is_zero());
    }
}

TEST_CASE("product is compatible with the action on polynomials") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const int n = 3 + static_cast<int>(t % 2);
    const auto a = random_element(rng, n), b = random_element(rng, n);
    for (int k = 0; k < 3; ++k) {
      const auto p = oracle::random_polynomial(rng, n, 4, 4);
      REQUIRE(act_on_poly(a * b, p) == act_on_poly(a, act_on_poly(b, p)));
    }
  }
}

TEST_CASE("associativity and distributivity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const int n = 3;
    const auto a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("left and right simple multiplication agree with the general product") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const int n = 4;
    const auto e = random_element(rng, n);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    REQUIRE(e.left_mul_simple(i) == D(i, n) * e);
    REQUIRE(e.right_mul_simple(i) == e * D(i, n));
  }
}

TEST_CASE("grading: products of homogeneous elements are homogeneous") {
  // alpha_i D_i has degree 0, D_w has degree -l(w)
  const int n = 4;
  const auto e = poly(IntPolynomial::simple_root(1, n)) * D(1, n) * D(2, n);
  for (const auto& [x, f] : e.terms()) CHECK(f.degree() - x.length() == -1);
}

TEST_CASE("weak-order pruning keeps the coefficient of the target") {
  std::mt19937_64 rng(9);
  const int n = 4;
  const Permutation target = longest_permutation(n);
  for (int t = 0; t < 30; ++t) {
    // a product of random letters and roots, multiplied from the left
    std::vector<std::pair<bool, int>> factors;
    for (int k = 0; k < 10; ++k) factors.push_back({rng() % 3 == 0, 1 + static_cast<int>(rng() % (n - 1))});
    int d_total = 0;
    for (auto [root, i] : factors) d_total += root ? 0 : 1;
    NilHeckeElement full = NilHeckeElement::unit(n), pruned = full;
    int left = d_total;
    for (auto [root, i] : factors) {
      if (root) {
        full = full.left_mul_poly(IntPolynomial::simple_root(i, n));
        pruned = pruned.left_mul_poly(IntPolynomial::simple_root(i, n));
      } else {
        full = full.left_mul_simple(i);
        pruned = pruned.left_mul_simple(i);
        --left;
      }
      PruneSpec spec;
      spec.target = target;
      spec.remaining_letters = left;
      pruned.prune(spec);
    }
    REQUIRE(pruned.coefficient_of(target) == full.coefficient_of(target));
  }
}
