#ifndef TORSION_ZAREMBA_HPP
#define TORSION_ZAREMBA_HPP

// The semigroups Gamma = <[[1,1],[0,1]], [[1,0],[1,1]]>^+ and
// Gamma_A = <[[a,1],[1,0]] [[b,1],[1,0]] : 1 <= a,b <= A>^+ inside SL(2,Z),
// enumeration of their top-left entries, and the bridge from Gamma-words to
// torsion certificates in SL_{3l+5}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "torsion/bigint.hpp"
#include "torsion/construct.hpp"
#include "torsion/errors.hpp"
#include "torsion/factor.hpp"
#include "torsion/search.hpp"

namespace torsion {

template <class T>
struct Mat2 {
  T m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static Mat2 identity() { return {}; }

  T det() const { return m11 * m22 - m12 * m21; }
  T max_entry() const { return std::max(std::max(m11, m12), std::max(m21, m22)); }

  const T& at(int r, int c) const {
    return r == 0 ? (c == 0 ? m11 : m12) : (c == 0 ? m21 : m22);
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
            x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

using BigMat2 = Mat2<BigInt>;

template <class T>
Mat2<T> gamma_letter(char letter) {
  if (letter == 'L') return {1, 1, 0, 1};
  if (letter == 'R') return {1, 0, 1, 1};
  throw InvalidInput(std::string("Gamma letters are L and R, got '") + letter + "'");
}

template <class T = BigInt>
Mat2<T> gamma_product(const std::string& word) {
  Mat2<T> g;
  for (char ch : word) g = g * gamma_letter<T>(ch);
  return g;
}

// A Gamma_A letter (a, b) stands for [[a,1],[1,0]] [[b,1],[1,0]].
using PairWord = std::vector<std::pair<int, int>>;

template <class T = BigInt>
Mat2<T> gamma_a_generator(int a, int b, int A) {
  detail::require(A >= 1 && a >= 1 && b >= 1 && a <= A && b <= A,
                  "Gamma_A letter out of range 1..A");
  const Mat2<T> lhs = Mat2<T>{a, 1, 1, 0} * Mat2<T>{b, 1, 1, 0};
  const Mat2<T> rhs = Mat2<T>{1, a, 0, 1} * Mat2<T>{1, 0, b, 1};
  detail::ensure(lhs == rhs, "[[a,1],[1,0]][[b,1],[1,0]] != [[1,a],[0,1]][[1,0],[b,1]]");
  detail::ensure(lhs == Mat2<T>{T(a) * b + 1, a, b, 1}, "generator closed form mismatch");
  return lhs;
}

template <class T = BigInt>
Mat2<T> gamma_a_product(const PairWord& word, int A) {
  Mat2<T> g;
  for (auto [a, b] : word) g = g * gamma_a_generator<T>(a, b, A);
  return g;
}

// (a, b) -> L^a R^b, so l(gamma) = sum (a + b) <= 2A l_A(gamma).
inline std::string to_gamma_word(const PairWord& word) {
  std::string s;
  for (auto [a, b] : word) s += std::string(a, 'L') + std::string(b, 'R');
  return s;
}

inline BigInt fibonacci(int m) {
  detail::require(m >= 0, "negative Fibonacci index");
  BigInt x = 0, y = 1;
  for (int k = 0; k < m; ++k) {
    BigInt t = x + y;
    x = y;
    y = t;
  }
  return x;
}

// gamma_11 >= F_{2 l_A + 1}
inline bool norm_bound_check(const PairWord& word, int A) {
  detail::require(!word.empty(), "norm_bound_check needs a nonempty word");
  const BigMat2 g = gamma_a_product(word, A);
  return g.m11 >= fibonacci(2 * static_cast<int>(word.size()) + 1);
}

// ---- enumeration ----------------------------------------------------------

namespace detail {

inline void check_enumeration_bounds(int A, std::uint64_t n_max) {
  require(A >= 1 && A <= 1000, "A must be in 1..1000");
  require(n_max >= 1, "N_max must be positive");
  require(n_max <= (std::uint64_t{1} << 40), "N_max above 2^40 is out of scope");
}

// First row (P, Q) of gamma; right multiplication by the (a, b) generator
// sends it to (P(ab+1) + Qb, Pa + Q). P strictly increases.
inline void continuant_dfs(int A, std::uint64_t n_max, std::uint64_t P, std::uint64_t Q,
                           std::vector<char>& seen) {
  seen[P] = 1;
  for (int a = 1; a <= A; ++a) {
    for (int b = 1; b <= A; ++b) {
      const std::uint64_t np = P * (static_cast<std::uint64_t>(a) * b + 1) + Q * b;
      if (np > n_max) break;  // increasing in b
      continuant_dfs(A, n_max, np, P * a + Q, seen);
    }
  }
}

}  // namespace detail

// All n <= n_max equal to gamma_11 for some nonempty Gamma_A word, sorted.
// Top-level letters are split across workers; the union is order-insensitive.
inline std::vector<std::uint64_t> representable_set(int A, std::uint64_t n_max, int workers = 1) {
  detail::check_enumeration_bounds(A, n_max);
  std::vector<std::pair<int, int>> roots;
  for (int a = 1; a <= A; ++a)
    for (int b = 1; b <= A; ++b)
      if (static_cast<std::uint64_t>(a) * b + 1 <= n_max) roots.emplace_back(a, b);
  const int w = std::max(1, std::min<int>(workers, static_cast<int>(roots.size())));
  std::vector<std::vector<char>> seen(w, std::vector<char>(n_max + 1, 0));
  detail::parallel_for(w, roots.size(), [&](std::size_t i, int k) {
    auto [a, b] = roots[i];
    detail::continuant_dfs(A, n_max, static_cast<std::uint64_t>(a) * b + 1, a, seen[k]);
  });
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    bool hit = false;
    for (const auto& s : seen) hit = hit || s[n];
    if (hit) out.push_back(n);
  }
  return out;
}

struct BfsStats {
  std::uint64_t elements = 0;  // enumerated semigroup elements
  int max_length = 0;
};

// Oracle: breadth-first over word length with full matrix products. Checks
// det = 1 and gamma_11 = max entry for every element it meets.
inline std::vector<std::uint64_t> representable_set_bfs(int A, std::uint64_t n_max,
                                                        BfsStats* stats = nullptr) {
  detail::check_enumeration_bounds(A, n_max);
  using M = Mat2<std::int64_t>;
  std::vector<M> gens;
  for (int a = 1; a <= A; ++a)
    for (int b = 1; b <= A; ++b) gens.push_back(gamma_a_generator<std::int64_t>(a, b, A));
  std::vector<char> seen(n_max + 1, 0);
  std::vector<M> level{M::identity()};
  BfsStats st;
  while (!level.empty()) {
    std::vector<M> next;
    for (const auto& g : level) {
      for (const auto& h : gens) {
        const M p = g * h;
        if (static_cast<std::uint64_t>(p.m11) > n_max) continue;
        detail::ensure(p.det() == 1, "semigroup element with determinant != 1");
        detail::ensure(p.m11 == p.max_entry() && p.m22 >= 0 && p.m12 >= 0 && p.m21 >= 0,
                       "gamma_11 is not the sup norm");
        seen[p.m11] = 1;
        next.push_back(p);
      }
    }
    st.elements += next.size();
    if (!next.empty()) ++st.max_length;
    level = std::move(next);
  }
  if (stats) *stats = st;
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= n_max; ++n)
    if (seen[n]) out.push_back(n);
  return out;
}

struct DensityReport {
  int A = 0;
  std::uint64_t N = 0;
  std::uint64_t count = 0;
  Rational density() const { return N == 0 ? Rational(0) : Rational(count, N); }
};

inline DensityReport density(int A, std::uint64_t N, int workers = 1) {
  return {A, N, representable_set(A, N, workers).size()};
}

inline std::vector<char> prime_sieve(std::uint64_t n) {
  std::vector<char> prime(n + 1, 1);
  prime[0] = 0;
  if (n >= 1) prime[1] = 0;
  for (std::uint64_t i = 2; i * i <= n; ++i)
    if (prime[i])
      for (std::uint64_t j = i * i; j <= n; j += i) prime[j] = 0;
  return prime;
}

struct PrimeReport {
  int A = 0;
  Rational theta;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> primes;
};

// Representable primes p with theta N < p <= N.
inline PrimeReport prime_records(int A, const Rational& theta, std::uint64_t N, int workers = 1) {
  detail::require(theta > 0 && theta < 1, "theta must lie in (0, 1)");
  PrimeReport r{A, theta, N, {}};
  if (N < 2) return r;
  const auto reps = representable_set(A, N, workers);
  const auto prime = prime_sieve(N);
  for (auto n : reps)
    if (prime[n] && Rational(n) > theta * N) r.primes.push_back(n);
  return r;
}

struct NormScan {
  std::uint64_t words = 0;
  std::uint64_t violations = 0;
  std::uint64_t equalities = 0;  // gamma_11 == F_{2l+1}
};

// Every Gamma_A word of length 1..max_len: det = 1, gamma_11 = max entry,
// gamma_11 >= F_{2l+1}.
inline NormScan norm_bound_scan(int A, int max_len) {
  detail::require(A >= 1 && max_len >= 1, "norm_bound_scan needs A, max_len >= 1");
  using M = Mat2<std::int64_t>;
  detail::require(std::pow(static_cast<double>(A) * A + 2, max_len) < 9e18,
                  "entries would overflow 64 bits");
  std::vector<M> gens;
  for (int a = 1; a <= A; ++a)
    for (int b = 1; b <= A; ++b) gens.push_back(gamma_a_generator<std::int64_t>(a, b, A));
  std::vector<std::int64_t> fib(2 * max_len + 2);
  fib[0] = 0;
  fib[1] = 1;
  for (std::size_t k = 2; k < fib.size(); ++k) fib[k] = fib[k - 1] + fib[k - 2];
  NormScan scan;
  std::vector<M> stack_m{M::identity()};
  std::vector<std::size_t> stack_i{0};
  while (!stack_m.empty()) {
    const int len = static_cast<int>(stack_m.size()) - 1;
    std::size_t& i = stack_i.back();
    if (len == max_len || i == gens.size()) {
      stack_m.pop_back();
      stack_i.pop_back();
      continue;
    }
    const M g = stack_m.back() * gens[i++];
    const int l = len + 1;
    ++scan.words;
    const bool ok = g.det() == 1 && g.m11 == g.max_entry() && g.m11 >= fib[2 * l + 1];
    if (!ok) ++scan.violations;
    if (g.m11 == fib[2 * l + 1]) ++scan.equalities;
    stack_m.push_back(g);
    stack_i.push_back(0);
  }
  return scan;
}

// ---- growth witness -------------------------------------------------------

struct GrowthWitness {
  int L = 0, A = 0;
  Rational theta;
  BigInt p;
  PairWord pair_word;
  std::string word;  // over {L, R}
  int length = 0;    // l(gamma)
  int length_a = 0;  // l_A(gamma)
  BigMat2 gamma;
  std::string lower, upper;  // theta N and N, rounded down
};

namespace detail {

using Float = boost::multiprecision::cpp_bin_float_50;

inline BigInt floor_to_int(const Float& x) {
  return static_cast<BigInt>(boost::multiprecision::floor(x));
}

}  // namespace detail

// A prime p = gamma_11 in (theta N, N], N = d phi^{L/A}, d = phi/sqrt 5,
// with l_A(gamma) <= L/(2A). Words are searched depth first, prefixes before
// extensions, letters (A,A), (A,A-1), ..., (1,1). Any such p exceeds
// a c^L with a = theta d and c = phi^{1/A}.
inline GrowthWitness growth_witness(int L, int A = 5, const Rational& theta = Rational(1, 2)) {
  detail::require(L >= 1 && A >= 1, "growth_witness needs L, A >= 1");
  detail::require(theta > 0 && theta < 1, "theta must lie in (0, 1)");
  using detail::Float;
  const Float phi = (1 + boost::multiprecision::sqrt(Float(5))) / 2;
  const Float d = phi / boost::multiprecision::sqrt(Float(5));
  const Float N = d * boost::multiprecision::pow(phi, Float(L) / A);
  const Float th = Float(boost::multiprecision::numerator(theta)) /
                   Float(boost::multiprecision::denominator(theta));
  const BigInt upper = detail::floor_to_int(N);
  const BigInt lower = detail::floor_to_int(th * N);  // p > theta N iff p > floor(theta N)
  const int max_la = L / (2 * A);
  detail::require(max_la >= 1, "L < 2A: no Gamma_A word fits the length bound");

  GrowthWitness w;
  w.L = L;
  w.A = A;
  w.theta = theta;
  w.lower = to_decimal(lower);
  w.upper = to_decimal(upper);
  PairWord cur;
  std::vector<BigMat2> prods{BigMat2::identity()};
  bool found = false;
  auto dfs = [&](auto&& self) -> void {
    if (found || static_cast<int>(cur.size()) == max_la) return;
    for (int a = A; a >= 1 && !found; --a) {
      for (int b = A; b >= 1 && !found; --b) {
        BigMat2 g = prods.back() * gamma_a_generator(a, b, A);
        if (g.m11 > upper) continue;
        cur.emplace_back(a, b);
        if (g.m11 > lower && is_probable_prime(g.m11)) {
          found = true;
          w.p = g.m11;
          w.pair_word = cur;
          w.gamma = g;
          return;
        }
        prods.push_back(g);
        self(self);
        prods.pop_back();
        if (!found) cur.pop_back();
      }
    }
  };
  dfs(dfs);
  if (!found)
    throw ResourceLimit("no representable prime in (theta N, N] with l_A <= " +
                        std::to_string(max_la) + " for L = " + std::to_string(L));
  w.word = to_gamma_word(w.pair_word);
  w.length = static_cast<int>(w.word.size());
  w.length_a = static_cast<int>(w.pair_word.size());
  detail::ensure(gamma_product(w.word) == w.gamma, "witness word does not multiply to gamma");
  detail::ensure(w.length <= 2 * A * w.length_a && w.length <= L, "witness word too long");
  return w;
}

// ---- torsion bridge -------------------------------------------------------

struct BridgeEntry {
  int row = 0, col = 0;
  BigInt gamma_entry;
  int sign = 1;  // operator value C = sign * gamma_entry
  TorsionCertificate certificate;
};

struct BridgeReport {
  std::string word;
  BigMat2 gamma;
  int N = 0;  // 3 l + 5
  std::vector<BridgeEntry> entries;
};

// L -> U_l, R -> U_u. Each nonzero entry of the product is certified; the
// certified value is (-1)^a times the operator value, which is +-gamma_ij,
// so every prime factor of gamma_ij is torsion in SL_{3l+5}.
inline BridgeReport torsion_bridge(const std::string& word, const CertifyOptions& opts = {}) {
  detail::require(!word.empty(), "torsion_bridge needs a nonempty word");
  for (char ch : word)
    detail::require(ch == 'L' || ch == 'R', "bridge words are over {L, R}");
  BridgeReport rep;
  rep.word = word;
  rep.gamma = gamma_product(word);
  rep.N = 3 * static_cast<int>(word.size()) + 5;
  const auto upper = parse_ulu_word(word);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const BigInt& g = rep.gamma.at(r, c);
      if (g == 0) continue;
      BridgeEntry e;
      e.row = r;
      e.col = c;
      e.gamma_entry = g;
      e.sign = ulu_sign(upper, r);
      e.certificate = certify(ulu_word_data(upper, r, c), opts);
      detail::ensure(e.certificate.N == rep.N, "bridge certificate rank is not 3l+5");
      detail::ensure(e.certificate.value == sign_of_a(e.certificate.data.a()) * e.sign * g,
                     "certified value does not match the matrix entry");
      for (const auto& p : factorize(g).primes)
        detail::ensure(e.certificate.value % p == 0, "prime factor of gamma_ij not certified");
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

}  // namespace torsion

#endif  // TORSION_ZAREMBA_HPP
