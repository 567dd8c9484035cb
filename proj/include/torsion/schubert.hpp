#ifndef TORSION_SCHUBERT_HPP
#define TORSION_SCHUBERT_HPP

// The coinvariant ring of S_n in the basis of Schubert classes X_w,
// normalised by X_{w_0} = x_1^{n-1} x_2^{n-2} ... x_{n-1} and
// X_w = d_{w w_0} X_{w_0}.

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "torsion/bigint.hpp"
#include "torsion/errors.hpp"
#include "torsion/poly.hpp"
#include "torsion/sym.hpp"

namespace torsion {

// Integer combination of Schubert classes X_w, all of the same length.
class SchubertVector {
 public:
  using CoeffMap = std::map<Permutation, BigInt>;

  SchubertVector() = default;
  explicit SchubertVector(int n) : n_(n) {}

  static SchubertVector basis(const Permutation& w) {
    SchubertVector v(w.n());
    v.add_term(w, 1);
    return v;
  }

  int n() const { return n_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  // Common length of the support, -1 when zero.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first.length(); }

  BigInt coefficient(const Permutation& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Permutation& w, const BigInt& c) {
    detail::require(w.n() == n_, "Schubert vector rank mismatch");
    if (c == 0) return;
    if (!coeffs_.empty())
      detail::require(w.length() == degree(), "Schubert vectors must be homogeneous");
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  SchubertVector& operator+=(const SchubertVector& o) {
    for (const auto& [w, c] : o.coeffs_) add_term(w, c);
    return *this;
  }

  SchubertVector& operator*=(const BigInt& c) {
    if (c == 0) coeffs_.clear();
    for (auto& [w, v] : coeffs_) v *= c;
    return *this;
  }

  friend bool operator==(const SchubertVector&, const SchubertVector&) = default;

 private:
  int n_ = 1;
  CoeffMap coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const SchubertVector& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [w, c] : v.coeffs()) {
    os << (first ? "" : " + ") << c << "*X" << w;
    first = false;
  }
  return os;
}

inline IntPolynomial staircase_monomial(int n) {
  Exponents e(n, 0);
  for (int i = 1; i <= n; ++i) e[i - 1] = static_cast<std::uint16_t>(n - i);
  return IntPolynomial::monomial(e, 1);
}

// Polynomial representative of X_w.
inline IntPolynomial schubert_rep(const Permutation& w) {
  const int n = w.n();
  return demazure(w * longest_permutation(n), staircase_monomial(n));
}

// d_i X_w = X_{s_i w} if s_i w < w, else 0.
inline SchubertVector demazure_schubert(int i, const SchubertVector& v) {
  detail::require(i >= 1 && i < v.n(), "generator index out of range");
  SchubertVector r(v.n());
  for (const auto& [w, c] : v.coeffs())
    if (w.has_left_descent(i)) r.add_term(w.simple_times(i), c);
  return r;
}

// d_w on Schubert vectors; the reduced word is applied right to left.
inline SchubertVector demazure_schubert(const Permutation& w, const SchubertVector& v) {
  const Word word = some_reduced_word(w);
  SchubertVector r = v;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    r = demazure_schubert(*it, r);
  return r;
}

// Chevalley formula: f X_w = sum over transpositions t = (i j), i < j, with
// l(tw) = l(w) + 1 of (f_i - f_j) X_{tw}, where f = sum_k f_k x_k.
inline SchubertVector chevalley_mul(const IntPolynomial& f, const SchubertVector& v) {
  const int n = v.n();
  detail::require(f.n() == n, "rank mismatch in Chevalley multiplication");
  detail::require(f.is_zero() || (f.is_homogeneous() && f.degree() == 1),
                  "Chevalley multiplication needs a linear form");
  std::vector<BigInt> lin(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    Exponents e(n, 0);
    e[k - 1] = 1;
    lin[k] = f.coefficient(e);
  }
  SchubertVector r(n);
  for (const auto& [w, c] : v.coeffs()) {
    const int lw = w.length();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const BigInt pairing = lin[i] - lin[j];
        if (pairing == 0) continue;
        const Permutation tw = Permutation::transposition(i, j, n) * w;
        if (tw.length() == lw + 1) r.add_term(tw, pairing * c);
      }
    }
  }
  return r;
}

enum class Variable { First, Last };

// k-fold multiplication by x_1 or x_n.
inline SchubertVector mul_power(const SchubertVector& v, Variable which, int k) {
  detail::require(k >= 0, "negative power");
  const int n = v.n();
  const IntPolynomial x = IntPolynomial::variable(which == Variable::First ? 1 : n, n);
  SchubertVector r = v;
  for (int j = 0; j < k && !r.is_zero(); ++j) r = chevalley_mul(x, r);
  return r;
}

// Complete homogeneous symmetric polynomial h_d(x_1, ..., x_k) in n variables.
inline IntPolynomial complete_homogeneous(int d, int k, int n) {
  IntPolynomial r(n);
  Exponents e(n, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == k - 1) {
      e[var] = static_cast<std::uint16_t>(left);
      r.add_term(e, 1);
      e[var] = 0;
      return;
    }
    for (int t = left; t >= 0; --t) {
      e[var] = static_cast<std::uint16_t>(t);
      rec(var + 1, left - t);
    }
    e[var] = 0;
  };
  rec(0, d);
  return r;
}

// Normal form modulo the ideal of positive-degree symmetric polynomials in
// the sub-staircase monomial basis (exponent of x_i at most n - i). Uses the
// relations x_k^{n-k+1} = x_k^{n-k+1} - h_{n-k+1}(x_1, ..., x_k), which only
// lower the x_k exponent and raise exponents of earlier variables.
inline IntPolynomial coinvariant_reduce(const IntPolynomial& p) {
  const int n = p.n();
  std::vector<IntPolynomial> tails(n + 1);
  for (int k = 1; k <= n; ++k) {
    Exponents lead(n, 0);
    lead[k - 1] = static_cast<std::uint16_t>(n - k + 1);
    tails[k] = IntPolynomial::monomial(lead, 1) - complete_homogeneous(n - k + 1, k, n);
  }
  IntPolynomial done(n);
  IntPolynomial work = p;
  while (!work.is_zero()) {
    auto it = work.terms().begin();
    Exponents e = it->first;
    BigInt c = it->second;
    work.add_term(e, -c);
    int bad = 0;
    for (int k = n; k >= 1; --k) {
      if (e[k - 1] > n - k) {
        bad = k;
        break;
      }
    }
    if (bad == 0) {
      done.add_term(e, c);
      continue;
    }
    Exponents rest = e;
    rest[bad - 1] = static_cast<std::uint16_t>(rest[bad - 1] - (n - bad + 1));
    work += IntPolynomial::monomial(rest, c) * tails[bad];
  }
  return done;
}

// Expansion of a homogeneous polynomial in the Schubert basis, by solving
// against the representatives in the sub-staircase monomial basis.
inline SchubertVector expand(const IntPolynomial& p) {
  detail::require(p.is_homogeneous(), "expand needs a homogeneous polynomial");
  const int n = p.n();
  SchubertVector out(n);
  const IntPolynomial red = coinvariant_reduce(p);
  if (red.is_zero()) return out;
  const int d = red.degree();
  const auto basis = permutations_of_length(n, d);
  std::map<Exponents, int> row_of;
  std::vector<IntPolynomial> reps;
  for (const auto& w : basis) {
    reps.push_back(schubert_rep(w));
    for (const auto& [e, c] : reps.back().terms()) row_of.try_emplace(e, 0);
  }
  for (const auto& [e, c] : red.terms()) {
    detail::ensure(row_of.count(e) > 0, "reduced polynomial leaves the Schubert span");
  }
  int r = 0;
  for (auto& [e, idx] : row_of) idx = r++;
  const std::size_t cols = basis.size();
  // Augmented system [reps | red] over Q.
  std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(cols + 1, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [e, c] : reps[j].terms()) m[row_of[e]][j] = Rational(c);
  for (const auto& [e, c] : red.terms()) m[row_of[e]][cols] = Rational(c);
  std::vector<int> pivot_col_row(cols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    detail::ensure(piv < m.size(), "Schubert representatives are not independent");
    std::swap(m[piv], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == row || m[k][col] == 0) continue;
      const Rational f = m[k][col];
      for (std::size_t c2 = col; c2 <= cols; ++c2) m[k][c2] -= f * m[row][c2];
    }
    pivot_col_row[col] = static_cast<int>(row);
    ++row;
  }
  for (std::size_t k = row; k < m.size(); ++k)
    detail::ensure(m[k][cols] == 0, "polynomial is not in the span of Schubert classes");
  for (std::size_t j = 0; j < cols; ++j) {
    const Rational& x = m[pivot_col_row[j]][cols];
    detail::ensure(denominator(x) == 1, "non-integral Schubert coefficient");
    out.add_term(basis[j], numerator(x));
  }
  return out;
}

// Coefficient of X_w, read both from the stored map and by iterating the
// Demazure rule along a reduced word of w down to X_id. The two must agree.
inline BigInt extract_coefficient(const SchubertVector& v, const Permutation& w) {
  detail::require(v.is_zero() || v.degree() == w.length(),
                  "coefficient extraction needs l(w) equal to the vector's degree");
  const BigInt direct = v.coefficient(w);
  SchubertVector r = v;
  for (int i : some_reduced_word(w).letters) r = demazure_schubert(i, r);
  const BigInt iterated = r.coefficient(Permutation::identity(v.n()));
  detail::ensure(direct == iterated, "coefficient extraction routes disagree");
  return direct;
}

// One primitive action on the coinvariant ring.
struct PrimitiveStep {
  enum class Kind { MulFirst, MulLast, Demazure };
  Kind kind = Kind::MulFirst;
  int power = 0;  // multiplication steps
  Permutation w;  // Demazure steps

  static PrimitiveStep mul_first(int k) { return {Kind::MulFirst, k, {}}; }
  static PrimitiveStep mul_last(int k) { return {Kind::MulLast, k, {}}; }
  static PrimitiveStep demazure(const Permutation& w) { return {Kind::Demazure, 0, w}; }

  int degree_shift() const { return kind == Kind::Demazure ? -w.length() : power; }

  friend bool operator==(const PrimitiveStep&, const PrimitiveStep&) = default;
};

// A composite operator: parts are applied in order, parts[0] first.
struct OperatorStep {
  std::string name;
  std::vector<PrimitiveStep> parts;

  int degree_shift() const {
    int s = 0;
    for (const auto& p : parts) s += p.degree_shift();
    return s;
  }
  bool is_degree_zero() const { return degree_shift() == 0; }

  // h -> d_w(x^k h) with x = x_1 or x_n.
  static OperatorStep demazure_of_power(Variable which, int k, const Permutation& w,
                                        std::string name = {}) {
    OperatorStep op;
    op.name = std::move(name);
    op.parts.push_back(which == Variable::First ? PrimitiveStep::mul_first(k)
                                                : PrimitiveStep::mul_last(k));
    op.parts.push_back(PrimitiveStep::demazure(w));
    return op;
  }

  // this followed by other
  OperatorStep then(const OperatorStep& other) const {
    OperatorStep op = *this;
    op.parts.insert(op.parts.end(), other.parts.begin(), other.parts.end());
    return op;
  }
};

inline SchubertVector apply_step(const PrimitiveStep& s, const SchubertVector& v) {
  switch (s.kind) {
    case PrimitiveStep::Kind::MulFirst:
      return mul_power(v, Variable::First, s.power);
    case PrimitiveStep::Kind::MulLast:
      return mul_power(v, Variable::Last, s.power);
    case PrimitiveStep::Kind::Demazure:
      return demazure_schubert(s.w, v);
  }
  return v;
}

inline SchubertVector apply_step(const OperatorStep& op, const SchubertVector& v) {
  SchubertVector r = v;
  for (const auto& p : op.parts) r = apply_step(p, r);
  return r;
}

// Matrix of a degree-preserving operator on the span of {X_w : l(w) = d};
// column j holds the image of basis[j]. basis is in canonical order.
struct OperatorMatrix {
  std::vector<Permutation> basis;
  std::vector<std::vector<BigInt>> entries;  // entries[row][col]

  std::size_t dim() const { return basis.size(); }

  int index_of(const Permutation& w) const {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == w) return static_cast<int>(k);
    return -1;
  }

  SchubertVector apply(const SchubertVector& v) const {
    SchubertVector r(v.n());
    for (const auto& [w, c] : v.coeffs()) {
      const int j = index_of(w);
      detail::require(j >= 0, "vector outside the matrix's domain");
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (entries[i][j] != 0) r.add_term(basis[i], entries[i][j] * c);
    }
    return r;
  }

  // Restriction to an invariant subspace spanned by some basis elements.
  OperatorMatrix restrict_to(const std::vector<Permutation>& sub) const {
    OperatorMatrix r;
    r.basis = sub;
    std::vector<int> idx;
    for (const auto& w : sub) {
      idx.push_back(index_of(w));
      detail::require(idx.back() >= 0, "restriction basis not in the domain");
    }
    for (int j : idx) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (entries[i][j] == 0) continue;
        bool inside = false;
        for (int k : idx) inside = inside || static_cast<std::size_t>(k) == i;
        detail::require(inside, "subspace is not invariant under the operator");
      }
    }
    r.entries.assign(sub.size(), std::vector<BigInt>(sub.size(), 0));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) r.entries[a][b] = entries[idx[a]][idx[b]];
    return r;
  }
};

inline OperatorMatrix operator_matrix(const OperatorStep& op, int degree, int n) {
  detail::require(op.is_degree_zero(), "operator_matrix needs a degree-zero operator");
  OperatorMatrix m;
  m.basis = permutations_of_length(n, degree);
  m.entries.assign(m.basis.size(), std::vector<BigInt>(m.basis.size(), 0));
  for (std::size_t j = 0; j < m.basis.size(); ++j) {
    const SchubertVector img = apply_step(op, SchubertVector::basis(m.basis[j]));
    for (const auto& [w, c] : img.coeffs()) m.entries[m.index_of(w)][j] = c;
  }
  return m;
}

}  // namespace torsion

#endif  // TORSION_SCHUBERT_HPP
