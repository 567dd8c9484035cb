// Independent reference computations shared by the test binaries. Nothing
// here calls the code it is used to check.
#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "torsion/poly.hpp"
#include "torsion/sym.hpp"

namespace oracle {

using torsion::BigInt;
using torsion::IntPolynomial;
using torsion::Permutation;
using torsion::Word;

// Lengths by breadth-first search in the Cayley graph of S_n.
inline std::map<Permutation, int> cayley_distances(int n) {
  std::map<Permutation, int> dist;
  std::deque<Permutation> q{Permutation::identity(n)};
  dist[q.front()] = 0;
  while (!q.empty()) {
    Permutation w = q.front();
    q.pop_front();
    for (int i = 1; i < n; ++i) {
      Permutation v = w * Permutation::simple(i, n);
      if (!dist.count(v)) {
        dist[v] = dist[w] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

// Every product of a subword of w, by brute force over 2^l masks.
inline std::set<Permutation> subword_products(const Word& w) {
  std::set<Permutation> out;
  const std::size_t l = w.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    Permutation p = Permutation::identity(w.n);
    for (std::size_t j = 0; j < l; ++j)
      if (mask >> j & 1) p = p * Permutation::simple(w.letters[j], w.n);
    out.insert(p);
  }
  return out;
}

// Divided difference straight from the definition: (f - s_i f) is divided
// by x_i - x_{i+1} with schoolbook long division in x_i.
inline IntPolynomial divided_difference_by_division(int i, const IntPolynomial& f) {
  const int n = f.n();
  IntPolynomial num = f;
  for (const auto& [e, c] : f.terms()) {
    torsion::Exponents t = e;
    std::swap(t[i - 1], t[i]);
    num.add_term(t, -c);
  }
  IntPolynomial q(n);
  // leading term in x_i: repeatedly cancel the monomial with the largest
  // x_i exponent using x_i^k y = x_i^{k-1} y (x_i - x_{i+1}) + x_i^{k-1} x_{i+1} y
  while (!num.is_zero()) {
    auto best = num.terms().begin();
    for (auto it = num.terms().begin(); it != num.terms().end(); ++it)
      if (it->first[i - 1] > best->first[i - 1]) best = it;
    torsion::Exponents e = best->first;
    const BigInt c = best->second;
    if (e[i - 1] == 0) throw std::logic_error("not divisible");
    e[i - 1] -= 1;
    q.add_term(e, c);
    IntPolynomial mono = IntPolynomial::monomial(e, c);
    num -= mono * (IntPolynomial::variable(i, n) - IntPolynomial::variable(i + 1, n));
  }
  return q;
}

struct BruteSub {
  std::vector<int> bits;
  Permutation value;
  int defect = 0;
};

// All 2^l subexpressions of w that evaluate to target, with decorations
// recomputed from lengths: d_j = U iff l(s_{i_j} x) > l(x), x the product of
// the chosen letters to the right of j.
inline std::vector<BruteSub> brute_subexpressions(const Word& w, const Permutation& target) {
  std::vector<BruteSub> out;
  const std::size_t l = w.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    Permutation x = Permutation::identity(w.n);
    int defect = 0;
    for (std::size_t j = l; j-- > 0;) {
      const Permutation s = Permutation::simple(w.letters[j], w.n);
      const bool up = (s * x).length() > x.length();
      if (mask >> j & 1)
        x = s * x;
      else
        defect += up ? 1 : -1;
    }
    if (x != target) continue;
    BruteSub b{std::vector<int>(l), x, defect};
    for (std::size_t j = 0; j < l; ++j) b.bits[j] = static_cast<int>(mask >> j & 1);
    out.push_back(std::move(b));
  }
  return out;
}

// Homogeneous polynomial of the given degree with a few random terms.
inline IntPolynomial random_homogeneous(std::mt19937_64& rng, int n, int degree, int terms) {
  IntPolynomial p(n);
  for (int t = 0; t < terms; ++t) {
    torsion::Exponents e(n, 0);
    for (int k = 0; k < degree; ++k) e[rng() % n] += 1;
    p.add_term(e, BigInt(static_cast<int>(rng() % 9) - 4));
  }
  return p;
}

inline IntPolynomial random_polynomial(std::mt19937_64& rng, int n, int max_deg, int terms) {
  IntPolynomial p(n);
  for (int t = 0; t < terms; ++t) {
    torsion::Exponents e(n, 0);
    for (int i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(rng() % (max_deg + 1));
    p.add_term(e, BigInt(static_cast<int>(rng() % 41) - 20));
  }
  return p;
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  for (int k = n - 1; k > 0; --k) std::swap(img[k], img[rng() % (k + 1)]);
  return Permutation(img);
}

inline BigInt fib(int m) {
  BigInt a = 0, b = 1;
  for (int k = 0; k < m; ++k) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace oracle
