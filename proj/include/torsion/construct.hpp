#ifndef TORSION_CONSTRUCT_HPP
#define TORSION_CONSTRUCT_HPP

// From operator data (w_i, a_i, b_i) in S_n to a reduced expression in
// S_N, N = a + n + b, whose intersection form at w_I,
// I = {1..N-1} \ {a, a+n}, is the 1x1 matrix (+-C).
//
// Ambient indexing: A = {s_1..s_{a-1}}, M = {s_{a+1}..s_{a+n-1}},
// B = {s_{a+n+1}..s_{N-1}}; S_n sits inside S_N as W_M (shift by a).
// The expression is
//   w_m u_m v_m ... w_1 u_1 v_1 w_M
// where u_i is a_i descending runs starting at s_a and v_i is b_i ascending
// runs starting at s_{a+n}; see layout_expression.

#include <climits>
#include <functional>
#include <string>
#include <vector>

#include "torsion/bigint.hpp"
#include "torsion/errors.hpp"
#include "torsion/factor.hpp"
#include "torsion/nilhecke.hpp"
#include "torsion/operator_data.hpp"
#include "torsion/poly.hpp"
#include "torsion/sym.hpp"

namespace torsion {

// Generators of S_n commuting with multiplication by x_1 and x_n.
inline ParabolicSet inner_commuting_set(int n) { return ParabolicSet::range(2, n - 2); }

inline bool is_normalized(const OperatorData& data) {
  const ParabolicSet mp = inner_commuting_set(data.n);
  for (const auto& it : data.items)
    if (!is_min_coset_rep(it.w, mp)) return false;
  return true;
}

// Replaces each w_i by its minimal representative in w_i W_{M'} and pushes
// the W_{M'} part inwards (d_u commutes with x_1, x_n for u in W_{M'}).
// With split_mixed, an item with a_i, b_i > 0 becomes (id, 0, b_i) followed by
// (w_i, a_i, 0). Throws InvalidInput if the pushed part annihilates the word.
inline OperatorData normalize(const OperatorData& data, bool split_mixed = false) {
  data.check_degree();
  OperatorData out{data.n, {}};
  const Permutation id = Permutation::identity(data.n);
  for (const auto& it : data.items) {
    if (split_mixed && it.a > 0 && it.b > 0) {
      out.items.push_back({id, 0, it.b});
      out.items.push_back({it.w, it.a, 0});
    } else {
      out.items.push_back(it);
    }
  }
  const ParabolicSet mp = inner_commuting_set(data.n);
  Permutation carry = id;
  for (auto k = out.items.size(); k-- > 0;) {
    Permutation w = carry * out.items[k].w;
    if (w.length() != carry.length() + out.items[k].w.length())
      throw InvalidInput("operator word vanishes identically (non-reduced Demazure product)");
    auto split = min_coset_rep(w, mp);
    out.items[k].w = split.min_rep;
    carry = split.parabolic;
  }
  if (!carry.is_identity())
    throw InvalidInput("operator word vanishes identically (Demazure operator hits a constant)");
  return out;
}

struct Segment {
  enum class Kind { Item, LowerRun, UpperRun, Longest };
  Kind kind;
  int item = -1;          // 0-based item index, -1 for Longest
  std::size_t begin = 0;  // [begin, end) positions in the word
  std::size_t end = 0;
};

struct Expression {
  Word word;
  std::vector<Segment> segments;
  int n = 0, a = 0, b = 0, N = 0;
};

// Target element w_I, I = {1..N-1} \ {a, a+n}.
inline Permutation target_element(int n, int a, int b) {
  const int N = a + n + b;
  std::vector<int> idx;
  for (int i = 1; i < N; ++i)
    if (i != a && i != a + n) idx.push_back(i);
  return longest_element(ParabolicSet(idx), N);
}

inline Permutation target_element(const OperatorData& data) {
  return target_element(data.n, data.a(), data.b());
}

inline Expression layout_expression(const OperatorData& data) {
  data.check_degree();
  detail::require(is_normalized(data),
                  "operator data must be normalized (minimal coset representatives)");
  Expression ex;
  ex.n = data.n;
  ex.a = data.a();
  ex.b = data.b();
  ex.N = data.N();
  const int a = ex.a, n = ex.n, N = ex.N;
  std::vector<int> letters;
  auto push_segment = [&](Segment::Kind kind, int item, const std::vector<int>& ls) {
    Segment s{kind, item, letters.size(), letters.size() + ls.size()};
    letters.insert(letters.end(), ls.begin(), ls.end());
    ex.segments.push_back(s);
  };
  std::vector<int> a_before(data.items.size() + 1, 0), b_before(data.items.size() + 1, 0);
  for (std::size_t i = 0; i < data.items.size(); ++i) {
    a_before[i + 1] = a_before[i] + data.items[i].a;
    b_before[i + 1] = b_before[i] + data.items[i].b;
  }
  for (auto i = data.items.size(); i-- > 0;) {
    const auto& it = data.items[i];
    push_segment(Segment::Kind::Item, static_cast<int>(i),
                 shift_word(some_reduced_word(it.w), a, N).letters);
    for (int k = it.a; k >= 1; --k) {
      std::vector<int> run;
      for (int j = a; j >= a - a_before[i] - k + 1; --j) run.push_back(j);
      push_segment(Segment::Kind::LowerRun, static_cast<int>(i), run);
    }
    for (int k = it.b; k >= 1; --k) {
      std::vector<int> run;
      for (int j = a + n; j <= a + n + b_before[i] + k - 1; ++j) run.push_back(j);
      push_segment(Segment::Kind::UpperRun, static_cast<int>(i), run);
    }
  }
  push_segment(Segment::Kind::Longest, -1,
               shift_word(some_reduced_word(longest_permutation(n)), a, N).letters);
  ex.word = Word(N, std::move(letters));
  return ex;
}

// Checks reducedness of the constructed expression before returning it.
inline Word build_expression(const OperatorData& data) {
  Expression ex = layout_expression(data);
  detail::ensure(is_reduced(ex.word), "constructed expression is not reduced");
  return ex.word;
}

enum class Decoration : char { Up = 'U', Down = 'D' };

struct Subexpression {
  std::vector<int> bits;
  std::vector<Decoration> decorations;
  Permutation value;  // the product of the chosen letters
  int defect = 0;

  std::string decorated() const {
    std::string s;
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (j) s += ' ';
      s += static_cast<char>(decorations[j]);
      s += static_cast<char>('0' + bits[j]);
    }
    return s;
  }
};

// Decorations are computed right to left: with x the product of the chosen
// letters strictly to the right of position j, d_j = U iff s_{i_j} x > x.
// The defect counts U0 minus D0.
inline Subexpression evaluate_subexpression(const Word& word, const std::vector<int>& bits) {
  detail::require(bits.size() == word.size(), "subexpression length mismatch");
  Subexpression s;
  s.bits = bits;
  s.decorations.resize(bits.size());
  Permutation x = Permutation::identity(word.n);
  for (auto j = word.size(); j-- > 0;) {
    const int i = word.letters[j];
    const bool up = !x.has_left_descent(i);
    s.decorations[j] = up ? Decoration::Up : Decoration::Down;
    if (bits[j]) {
      x = x.simple_times(i);
    } else {
      s.defect += up ? 1 : -1;
    }
  }
  s.value = x;
  return s;
}

// Closed form: 1 on w_M, 0 on each w_i, and (0,1,...,1) on every run.
// Asserts that it evaluates to w_I with defect zero.
inline Subexpression defect_zero_subexpression(const OperatorData& data, const Word& word) {
  const Expression ex = layout_expression(data);
  detail::require(ex.word == word, "word is not the expression built from this data");
  std::vector<int> bits(word.size(), 0);
  for (const auto& seg : ex.segments) {
    for (std::size_t j = seg.begin; j < seg.end; ++j) {
      switch (seg.kind) {
        case Segment::Kind::Item:
          bits[j] = 0;
          break;
        case Segment::Kind::LowerRun:
        case Segment::Kind::UpperRun:
          bits[j] = j == seg.begin ? 0 : 1;
          break;
        case Segment::Kind::Longest:
          bits[j] = 1;
          break;
      }
    }
  }
  Subexpression s = evaluate_subexpression(word, bits);
  detail::ensure(s.value == target_element(data), "closed-form subexpression misses w_I");
  detail::ensure(s.defect == 0, "closed-form subexpression has nonzero defect");
  return s;
}

// Every subexpression of word evaluating to target, by depth-first search
// from the right. A branch is cut when target * x^{-1} is not below the
// Demazure product of the remaining prefix in Bruhat order, which is exactly
// the condition for some subword of the prefix to finish the product.
inline std::vector<Subexpression> subexpressions_reaching(const Word& word,
                                                          const Permutation& target) {
  const std::size_t l = word.size();
  std::vector<Permutation> prefix_max(l + 1);
  prefix_max[0] = Permutation::identity(word.n);
  for (std::size_t j = 0; j < l; ++j) {
    Permutation p = prefix_max[j];
    if (!p.has_right_descent(word.letters[j])) p = p.times_simple(word.letters[j]);
    prefix_max[j + 1] = p;
  }
  std::vector<Subexpression> found;
  std::vector<int> bits(l, 0);
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t j,
                                                                 const Permutation& x) {
    // positions [0, j) remain undecided
    if (!bruhat_leq(target * x.inverse(), prefix_max[j])) return;
    if (j == 0) {
      found.push_back(evaluate_subexpression(word, bits));
      return;
    }
    bits[j - 1] = 0;
    rec(j - 1, x);
    bits[j - 1] = 1;
    rec(j - 1, x.simple_times(word.letters[j - 1]));
    bits[j - 1] = 0;
  };
  rec(l, Permutation::identity(word.n));
  return found;
}

inline std::vector<Subexpression> defect_zero_subexpressions(const Word& word,
                                                             const Permutation& target) {
  std::vector<Subexpression> out;
  for (auto& s : subexpressions_reaching(word, target))
    if (s.defect == 0) out.push_back(std::move(s));
  return out;
}

// Evaluates the block product
//   (D_{w_m} g_m d_m) ... (D_{w_1} g_1 d_1)
// on 1 in Z[x_1..x_N], where g_i (resp. d_i) is the product of one root
// x_k - x_{a+1}, k <= a (resp. x_{a+n} - x_k, k > a+n) per run of u_i
// (resp. v_i). The result has degree zero, so it is the integer
// (-1)^a C, the coefficient of D_{w_I} in the nil Hecke product E.
inline BigInt evaluate_structured(const OperatorData& data) {
  data.check_degree();
  detail::require(is_normalized(data), "operator data must be normalized");
  const int n = data.n, a = data.a(), N = data.N();
  IntPolynomial h = IntPolynomial::one(N);
  int a_before = 0, b_before = 0;
  for (const auto& it : data.items) {
    IntPolynomial mult = IntPolynomial::one(N);
    for (int k = 1; k <= it.a; ++k) {
      mult = mult * (IntPolynomial::variable(a - a_before - k + 1, N) -
                     IntPolynomial::variable(a + 1, N));
    }
    for (int k = 1; k <= it.b; ++k) {
      mult = mult * (IntPolynomial::variable(a + n, N) -
                     IntPolynomial::variable(a + n + b_before + k, N));
    }
    a_before += it.a;
    b_before += it.b;
    h = demazure(embed(it.w, a, N), mult * h);
    if (h.is_zero()) return 0;
  }
  detail::ensure(h.is_constant(), "structured evaluation left a non-constant polynomial");
  return h.constant_term();
}

struct NilHeckeLimits {
  int max_rank_unpruned = 8;
  int max_rank_pruned = 14;
};

// Builds E = E_m F_m G_m ... E_1 F_1 G_1 E_0 literally in NH, letter by
// letter from the right: letters of w_i and w_M become D_i, the first letter
// of every run becomes the root alpha_i = x_i - x_{i+1}, the other run
// letters become D_i. Returns the coefficient of D_{w_I}, which must be an
// integer.
inline BigInt evaluate_nilhecke(const OperatorData& data, const NilHeckeLimits& limits = {}) {
  const Expression ex = layout_expression(data);
  const int N = ex.N;
  if (N > limits.max_rank_pruned)
    throw ResourceLimit("nil Hecke evaluation capped at rank " +
                        std::to_string(limits.max_rank_pruned) + ", got " + std::to_string(N));
  const bool pruned = N > limits.max_rank_unpruned;
  const Permutation target = target_element(data);
  std::vector<bool> is_root(ex.word.size(), false);
  for (const auto& seg : ex.segments)
    if (seg.kind == Segment::Kind::LowerRun || seg.kind == Segment::Kind::UpperRun)
      is_root[seg.begin] = true;
  int d_left = 0;
  for (std::size_t j = 0; j < ex.word.size(); ++j) d_left += is_root[j] ? 0 : 1;

  NilHeckeElement e = NilHeckeElement::unit(N);
  for (auto j = ex.word.size(); j-- > 0;) {
    const int i = ex.word.letters[j];
    if (is_root[j]) {
      e = e.left_mul_poly(IntPolynomial::simple_root(i, N));
    } else {
      e = e.left_mul_simple(i);
      --d_left;
    }
    if (pruned) {
      PruneSpec spec;
      spec.target = target;
      spec.remaining_letters = d_left;
      e.prune(spec);
    }
  }
  const IntPolynomial coeff = e.coefficient_of(target);
  detail::ensure(coeff.is_constant(), "coefficient of D_{w_I} is not an integer");
  if (!pruned) {
    detail::ensure(e.size() <= 1, "E has terms besides D_{w_I}");
  }
  return coeff.constant_term();
}

struct TorsionCertificate {
  OperatorData data;  // normalized
  int N = 0;
  Word word;
  Permutation x;  // w_I
  BigInt value;   // (-1)^a C
  Factorization factors;
  Subexpression defect_zero;
  bool nilhecke_checked = false;
};

struct CertifyOptions {
  bool nilhecke_check = false;
  NilHeckeLimits limits;
  std::uint64_t factor_effort = 1ULL << 22;
};

inline int sign_of_a(int a) { return a % 2 == 0 ? 1 : -1; }

inline TorsionCertificate certify(const OperatorData& input, const CertifyOptions& opts = {}) {
  input.check_degree();
  const BigInt c = operator_word_value(input);
  if (c == 0) throw InvalidInput("C = 0: the operator word gives no certificate");
  TorsionCertificate cert;
  cert.data = normalize(input);
  const BigInt c_norm = operator_word_value(cert.data);
  detail::ensure(c_norm == c, "normalization changed the operator word value");
  cert.N = cert.data.N();
  cert.word = build_expression(cert.data);
  cert.x = target_element(cert.data);
  cert.defect_zero = defect_zero_subexpression(cert.data, cert.word);
  cert.value = evaluate_structured(cert.data);
  detail::ensure(cert.value == sign_of_a(cert.data.a()) * c,
                 "structured evaluation disagrees with (-1)^a C: got " + to_decimal(cert.value) +
                     ", C = " + to_decimal(c));
  if (opts.nilhecke_check) {
    const BigInt nh = evaluate_nilhecke(cert.data, opts.limits);
    detail::ensure(nh == cert.value, "nil Hecke evaluation disagrees with structured evaluation");
    cert.nilhecke_checked = true;
  }
  cert.factors = factorize(cert.value, opts.factor_effort);
  return cert;
}

}  // namespace torsion

#endif  // TORSION_CONSTRUCT_HPP
