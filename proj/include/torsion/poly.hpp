#ifndef TORSION_POLY_HPP
#define TORSION_POLY_HPP

// Sparse polynomials in Z[x_1, ..., x_n] with the permutation action and
// divided difference operators.
//
// Degrees reported by degree() are algebraic (deg x_i = 1). The cohomological
// grading with deg x_i = 2 is available as paper_degree().

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "torsion/bigint.hpp"
#include "torsion/errors.hpp"
#include "torsion/operator_data.hpp"
#include "torsion/sym.hpp"

namespace torsion {

using Exponents = std::vector<std::uint16_t>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic order, used for canonical output.
inline bool grlex_less(const Exponents& u, const Exponents& v) {
  const int du = total_degree(u), dv = total_degree(v);
  if (du != dv) return du < dv;
  return u < v;
}

class IntPolynomial {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  IntPolynomial() = default;
  explicit IntPolynomial(int n) : n_(n) {
    detail::require(n >= 1, "polynomial ring needs at least one variable");
  }

  static IntPolynomial zero(int n) { return IntPolynomial(n); }

  static IntPolynomial constant(const BigInt& c, int n) {
    IntPolynomial p(n);
    if (c != 0) p.terms_.emplace(Exponents(n, 0), c);
    return p;
  }

  static IntPolynomial one(int n) { return constant(1, n); }

  static IntPolynomial variable(int i, int n) {
    detail::require(i >= 1 && i <= n, "variable index out of range");
    Exponents e(n, 0);
    e[i - 1] = 1;
    return monomial(e, 1);
  }

  static IntPolynomial monomial(const Exponents& e, const BigInt& c) {
    IntPolynomial p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  // x_i - x_{i+1}
  static IntPolynomial simple_root(int i, int n) {
    return variable(i, n) - variable(i + 1, n);
  }

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  BigInt constant_term() const {
    auto it = terms_.find(Exponents(n_, 0));
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Largest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  int paper_degree() const { return is_zero() ? -1 : 2 * degree(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  IntPolynomial& operator+=(const IntPolynomial& q) {
    check_rank(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& q) {
    check_rank(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  IntPolynomial& operator*=(const BigInt& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
  friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }
  friend IntPolynomial operator-(IntPolynomial p) { return p *= BigInt(-1); }
  friend IntPolynomial operator*(IntPolynomial p, const BigInt& c) { return p *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial p) { return p *= c; }

  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    p.check_rank(q);
    IntPolynomial r(p.n_);
    Exponents e(p.n_);
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) {
        for (int k = 0; k < p.n_; ++k) e[k] = static_cast<std::uint16_t>(ep[k] + eq[k]);
        r.add_term(e, cp * cq);
      }
    }
    return r;
  }

  IntPolynomial pow(int k) const {
    detail::require(k >= 0, "negative power");
    IntPolynomial r = one(n_);
    for (int j = 0; j < k; ++j) r = r * *this;
    return r;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void check_rank(const IntPolynomial& q) const {
    detail::require(n_ == q.n_, "polynomial rank mismatch");
  }

  int n_ = 1;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  if (p.is_zero()) return os << "0";
  std::vector<std::pair<Exponents, BigInt>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& u, const auto& v) { return grlex_less(v.first, u.first); });
  bool first = true;
  for (const auto& [e, c] : ts) {
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    BigInt m = abs_value(c);
    bool any = false;
    if (m != 1 || total_degree(e) == 0) {
      os << m;
      any = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << (any ? "*" : "") << 'x' << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
      any = true;
    }
    first = false;
  }
  return os;
}

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
inline IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
inline IntPolynomial scale(const IntPolynomial& p, const BigInt& c) { return p * c; }

// w . f : substitutes x_i -> x_{w(i)}.
inline IntPolynomial act(const Permutation& w, const IntPolynomial& p) {
  detail::require(w.n() == p.n(), "rank mismatch in permutation action");
  IntPolynomial r(p.n());
  Exponents e(p.n());
  for (const auto& [ep, c] : p.terms()) {
    for (int i = 1; i <= p.n(); ++i) e[w(i) - 1] = ep[i - 1];
    r.add_term(e, c);
  }
  return r;
}

// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial with the
// geometric sum (x^r - y^r)/(x - y) = sum_k x^{r-1-k} y^k.
inline IntPolynomial divided_difference(int i, const IntPolynomial& p) {
  detail::require(i >= 1 && i < p.n(), "divided difference index out of range");
  IntPolynomial r(p.n());
  for (const auto& [e, c] : p.terms()) {
    const int ei = e[i - 1], ej = e[i];
    if (ei == ej) continue;
    const int lo = std::min(ei, ej);
    const int span = std::max(ei, ej) - lo;
    const BigInt coeff = ei > ej ? c : BigInt(-c);
    Exponents t = e;
    for (int k = 0; k < span; ++k) {
      t[i - 1] = static_cast<std::uint16_t>(lo + span - 1 - k);
      t[i] = static_cast<std::uint16_t>(lo + k);
      r.add_term(t, coeff);
    }
  }
  return r;
}

// d_{i_1} ... d_{i_m}(f) for a reduced word [i_1, ..., i_m]; d_{i_m} acts first.
inline IntPolynomial demazure(const Word& w, const IntPolynomial& p) {
  detail::require(w.n == p.n(), "rank mismatch in Demazure operator");
  detail::require(is_reduced(w), "Demazure operator needs a reduced word");
  IntPolynomial r = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend() && !r.is_zero(); ++it)
    r = divided_difference(*it, r);
  return r;
}

inline IntPolynomial demazure(const Permutation& w, const IntPolynomial& p) {
  return demazure(some_reduced_word(w), p);
}

// Evaluates the nested operator word innermost first in Z[x_1..x_n].
inline BigInt operator_word_value(const OperatorData& data) {
  data.check_degree();
  const int n = data.n;
  const IntPolynomial x1 = IntPolynomial::variable(1, n);
  const IntPolynomial xn = IntPolynomial::variable(n, n);
  IntPolynomial h = IntPolynomial::one(n);
  for (const auto& item : data.items) {
    h = x1.pow(item.a) * xn.pow(item.b) * h;
    h = demazure(item.w, h);
    if (h.is_zero()) return 0;
  }
  detail::ensure(h.is_constant(),
                 "operator word evaluated to a non-constant polynomial");
  return h.constant_term();
}

}  // namespace torsion

#endif  // TORSION_POLY_HPP
