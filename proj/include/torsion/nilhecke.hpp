#ifndef TORSION_NILHECKE_HPP
#define TORSION_NILHECKE_HPP

// The nil Hecke ring NH: generated by R = Z[x_1..x_n] and symbols D_i with
// the braid relations, D_i^2 = 0 and D_i f = s_i(f) D_i + d_i(f). As a left
// R-module it is free on {D_w}. Elements are stored as sum_x f_x D_x.
//
// Grading: a term f D_x has degree deg(f) - l(x) with deg x_i = 1.

#include <climits>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "torsion/errors.hpp"
#include "torsion/poly.hpp"
#include "torsion/sym.hpp"

namespace torsion {

// Describes which terms may be dropped while forming a product whose result
// feeds into further left multiplications.
struct PruneSpec {
  // Terms whose degree plus remaining_max_degree is below this are dropped.
  int target_degree = INT_MIN;
  int remaining_max_degree = 0;
  // When set: only terms f D_x with x <=_L target and
  // l(target) - l(x) <= remaining_letters can still reach D_target.
  std::optional<Permutation> target;
  int remaining_letters = 0;
};

class NilHeckeElement {
 public:
  using TermMap = std::map<Permutation, IntPolynomial>;

  NilHeckeElement() = default;
  explicit NilHeckeElement(int n) : n_(n) {}

  static NilHeckeElement zero(int n) { return NilHeckeElement(n); }

  static NilHeckeElement from_poly(const IntPolynomial& f) {
    NilHeckeElement e(f.n());
    e.add_term(Permutation::identity(f.n()), f);
    return e;
  }

  static NilHeckeElement unit(int n) { return from_poly(IntPolynomial::one(n)); }

  static NilHeckeElement d_of(const Permutation& w) {
    NilHeckeElement e(w.n());
    e.add_term(w, IntPolynomial::one(w.n()));
    return e;
  }

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  IntPolynomial coefficient_of(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? IntPolynomial::zero(n_) : it->second;
  }

  void add_term(const Permutation& x, const IntPolynomial& f) {
    detail::require(x.n() == n_ && f.n() == n_, "nil Hecke rank mismatch");
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NilHeckeElement& operator+=(const NilHeckeElement& o) {
    detail::require(o.n_ == n_, "nil Hecke rank mismatch");
    for (const auto& [x, f] : o.terms_) add_term(x, f);
    return *this;
  }

  friend NilHeckeElement operator+(NilHeckeElement a, const NilHeckeElement& b) {
    return a += b;
  }

  // f * this
  NilHeckeElement left_mul_poly(const IntPolynomial& f) const {
    NilHeckeElement r(n_);
    for (const auto& [x, g] : terms_) r.add_term(x, f * g);
    return r;
  }

  // D_i * this, one application of D_i g = s_i(g) D_i + d_i(g).
  NilHeckeElement left_mul_simple(int i) const {
    detail::require(i >= 1 && i < n_, "generator index out of range");
    NilHeckeElement r(n_);
    const Permutation s = Permutation::simple(i, n_);
    for (const auto& [x, g] : terms_) {
      if (!x.has_left_descent(i)) r.add_term(x.simple_times(i), act(s, g));
      r.add_term(x, divided_difference(i, g));
    }
    return r;
  }

  // this * D_i
  NilHeckeElement right_mul_simple(int i) const {
    detail::require(i >= 1 && i < n_, "generator index out of range");
    NilHeckeElement r(n_);
    for (const auto& [x, g] : terms_)
      if (!x.has_right_descent(i)) r.add_term(x.times_simple(i), g);
    return r;
  }

  void prune(const PruneSpec& spec) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (!survives(it->first, it->second, spec))
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  friend bool operator==(const NilHeckeElement&, const NilHeckeElement&) = default;

 private:
  static bool survives(const Permutation& x, const IntPolynomial& f,
                       const PruneSpec& spec) {
    if (spec.target_degree != INT_MIN &&
        f.degree() - x.length() + spec.remaining_max_degree < spec.target_degree)
      return false;
    if (spec.target) {
      const int gap = spec.target->length() - x.length();
      if (gap < 0 || gap > spec.remaining_letters) return false;
      if (!left_weak_leq(x, *spec.target)) return false;
    }
    return true;
  }

  int n_ = 1;
  TermMap terms_;
};

inline NilHeckeElement d_of(const Permutation& w) { return NilHeckeElement::d_of(w); }

inline IntPolynomial coefficient_of(const NilHeckeElement& e, const Permutation& w) {
  return e.coefficient_of(w);
}

namespace detail {

inline NilHeckeElement multiply_impl(const NilHeckeElement& a, const NilHeckeElement& b,
                                     const PruneSpec* spec) {
  require(a.n() == b.n(), "nil Hecke rank mismatch");
  NilHeckeElement r(a.n());
  for (const auto& [x, f] : a.terms()) {
    const Word wx = some_reduced_word(x);
    NilHeckeElement t = b;
    int left = static_cast<int>(wx.size());
    for (auto it = wx.letters.rbegin(); it != wx.letters.rend() && !t.is_zero(); ++it) {
      t = t.left_mul_simple(*it);
      --left;
      if (spec != nullptr) {
        PruneSpec inner = *spec;
        inner.remaining_letters += left;
        inner.target_degree = INT_MIN;
        t.prune(inner);
      }
    }
    r += t.left_mul_poly(f);
  }
  if (spec != nullptr) r.prune(*spec);
  return r;
}

}  // namespace detail

// Associative product, expanded one simple factor at a time.
inline NilHeckeElement multiply(const NilHeckeElement& a, const NilHeckeElement& b) {
  return detail::multiply_impl(a, b, nullptr);
}

inline NilHeckeElement operator*(const NilHeckeElement& a, const NilHeckeElement& b) {
  return multiply(a, b);
}

// Same as multiply, but drops terms that the prune spec proves cannot
// contribute to the wanted part of a later product.
inline NilHeckeElement multiply_pruned(const NilHeckeElement& a, const NilHeckeElement& b,
                                       const PruneSpec& spec) {
  return detail::multiply_impl(a, b, &spec);
}

inline NilHeckeElement multiply_pruned(const NilHeckeElement& a, const NilHeckeElement& b,
                                       int target_degree, int remaining_max_degree = 0) {
  PruneSpec spec;
  spec.target_degree = target_degree;
  spec.remaining_max_degree = remaining_max_degree;
  return multiply_pruned(a, b, spec);
}

// R as an NH-module: D_i -> d_i, f -> multiplication by f.
inline IntPolynomial act_on_poly(const NilHeckeElement& e, const IntPolynomial& p) {
  detail::require(e.n() == p.n(), "nil Hecke rank mismatch");
  IntPolynomial r(p.n());
  for (const auto& [x, f] : e.terms()) r += f * demazure(x, p);
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const NilHeckeElement& e) {
  if (e.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [x, f] : e.terms()) {
    os << (first ? "" : " + ") << '(' << f << ")*D" << x;
    first = false;
  }
  return os;
}

}  // namespace torsion

#endif  // TORSION_NILHECKE_HPP
