#ifndef TORSION_SYM_HPP
#define TORSION_SYM_HPP

// Type A Coxeter combinatorics: permutations in one-line notation, words in
// the simple transpositions s_1..s_{n-1}, parabolic subgroups and cosets.
//
// Conventions used throughout the library:
//   * everything is 1-indexed: a permutation of rank n maps {1..n} to itself,
//     and s_i swaps i and i+1;
//   * composition is (u * v)(k) = u(v(k)), so a word [i_1, ..., i_m] denotes
//     the product s_{i_1} ... s_{i_m} taken left to right;
//   * s_i * w swaps the *values* i, i+1 of w, w * s_i swaps *positions* i, i+1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "torsion/errors.hpp"

namespace torsion {

class Permutation {
 public:
  Permutation() = default;

  // One-line notation, 1-based images.
  explicit Permutation(const std::vector<int>& images) {
    const auto n = images.size();
    detail::require(n >= 1 && n <= 255, "permutation rank must be in 1..255");
    std::vector<bool> seen(n + 1, false);
    images_.reserve(n);
    for (int v : images) {
      detail::require(v >= 1 && static_cast<std::size_t>(v) <= n && !seen[v],
                      "permutation images must be a bijection of 1..n");
      seen[v] = true;
      images_.push_back(static_cast<std::uint8_t>(v));
    }
  }

  static Permutation identity(int n) {
    detail::require(n >= 1, "rank must be positive");
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{1});
    return p;
  }

  static Permutation simple(int i, int n) {
    detail::require(i >= 1 && i < n, "simple reflection index out of range");
    Permutation p = identity(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  // The transposition (i j), i != j.
  static Permutation transposition(int i, int j, int n) {
    detail::require(i >= 1 && j >= 1 && i <= n && j <= n && i != j,
                    "transposition indices out of range");
    Permutation p = identity(n);
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
  }

  int n() const { return static_cast<int>(images_.size()); }

  int operator()(int k) const { return images_[k - 1]; }

  std::vector<int> images() const { return {images_.begin(), images_.end()}; }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
      p.images_[images_[k] - 1] = static_cast<std::uint8_t>(k + 1);
    }
    return p;
  }

  // Inversion count.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        if (images_[i] > images_[j]) ++inv;
    return inv;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k)
      if (images_[k] != k + 1) return false;
    return true;
  }

  // l(w s_i) < l(w)
  bool has_right_descent(int i) const { return images_[i - 1] > images_[i]; }

  // l(s_i w) < l(w), i.e. i+1 appears before i in one-line notation.
  bool has_left_descent(int i) const {
    for (auto v : images_) {
      if (v == i) return false;
      if (v == i + 1) return true;
    }
    return false;
  }

  Permutation times_simple(int i) const {  // w * s_i
    Permutation p = *this;
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  Permutation simple_times(int i) const {  // s_i * w
    Permutation p = *this;
    for (auto& v : p.images_) {
      if (v == i)
        v = static_cast<std::uint8_t>(i + 1);
      else if (v == i + 1)
        v = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    detail::require(u.n() == v.n(), "rank mismatch in composition");
    Permutation p;
    p.images_.resize(v.images_.size());
    for (std::size_t k = 0; k < v.images_.size(); ++k) {
      p.images_[k] = u.images_[v.images_[k] - 1];
    }
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : images_) h = (h ^ v) * 1099511628211ULL;
    return h;
  }

 private:
  std::vector<std::uint8_t> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& w) {
  os << '(';
  for (int k = 1; k <= w.n(); ++k) os << (k > 1 ? "," : "") << w(k);
  return os << ')';
}

struct Word {
  int n = 1;
  std::vector<int> letters;

  Word() = default;
  Word(int rank, std::vector<int> ls) : n(rank), letters(std::move(ls)) {
    for (int i : letters) {
      detail::require(i >= 1 && i < n, "word letter out of range for rank " +
                                           std::to_string(n));
    }
  }

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

// A subset of the generator indices {1..n-1}, kept sorted and unique.
struct ParabolicSet {
  std::vector<int> indices;

  ParabolicSet() = default;
  explicit ParabolicSet(std::vector<int> idx) : indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  }

  // {first, first+1, ..., last}; empty when last < first.
  static ParabolicSet range(int first, int last) {
    ParabolicSet s;
    for (int i = first; i <= last; ++i) s.indices.push_back(i);
    return s;
  }

  bool contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
  }

  void check_rank(int n) const {
    for (int i : indices)
      detail::require(i >= 1 && i < n, "parabolic index out of range");
  }
};

inline Permutation identity(int n) { return Permutation::identity(n); }

inline Permutation compose(const Permutation& u, const Permutation& v) {
  return u * v;
}

inline int length(const Permutation& w) { return w.length(); }

inline Permutation word_to_perm(const Word& w) {
  Permutation p = Permutation::identity(w.n);
  for (int i : w.letters) p = p.times_simple(i);
  return p;
}

inline bool is_reduced(const Word& w) {
  return static_cast<std::size_t>(word_to_perm(w).length()) == w.size();
}

// Staircase normal form: sort w by moving the value k to position k for
// k = n, n-1, ..., 2 using adjacent position swaps, then read the swaps
// backwards. Each descending run of the output moves one letter into place.
inline Word some_reduced_word(const Permutation& w) {
  std::vector<int> cur = w.images();
  std::vector<int> swaps;
  for (int k = w.n(); k >= 2; --k) {
    int pos = static_cast<int>(std::find(cur.begin(), cur.end(), k) - cur.begin()) + 1;
    for (int j = pos; j < k; ++j) {
      std::swap(cur[j - 1], cur[j]);
      swaps.push_back(j);
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return Word(w.n(), std::move(swaps));
}

// Longest element of the parabolic subgroup generated by {s_i : i in I}:
// reverses every maximal run of consecutive indices.
inline Permutation longest_element(const ParabolicSet& I, int n) {
  I.check_rank(n);
  std::vector<int> img = Permutation::identity(n).images();
  std::size_t k = 0;
  while (k < I.indices.size()) {
    std::size_t e = k;
    while (e + 1 < I.indices.size() && I.indices[e + 1] == I.indices[e] + 1) ++e;
    std::reverse(img.begin() + (I.indices[k] - 1), img.begin() + I.indices[e] + 1);
    k = e + 1;
  }
  return Permutation(img);
}

// w_0 of S_n.
inline Permutation longest_permutation(int n) {
  return longest_element(ParabolicSet::range(1, n - 1), n);
}

inline bool is_min_coset_rep(const Permutation& w, const ParabolicSet& I) {
  I.check_rank(w.n());
  for (int j : I.indices)
    if (w.has_right_descent(j)) return false;
  return true;
}

struct CosetSplit {
  Permutation min_rep;  // shortest element of w W_I
  Permutation parabolic;  // element of W_I with w = min_rep * parabolic
};

inline CosetSplit min_coset_rep(const Permutation& w, const ParabolicSet& I) {
  I.check_rank(w.n());
  Permutation rep = w;
  Permutation u = Permutation::identity(w.n());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : I.indices) {
      if (rep.has_right_descent(j)) {
        rep = rep.times_simple(j);
        u = u.simple_times(j);
        changed = true;
      }
    }
  }
  return {rep, u};
}

// Image of w under S_k -> S_n acting on {offset+1, ..., offset+k}.
inline Permutation embed(const Permutation& w, int offset, int n) {
  detail::require(offset >= 0 && offset + w.n() <= n, "embedding out of range");
  std::vector<int> img = Permutation::identity(n).images();
  for (int k = 1; k <= w.n(); ++k) img[offset + k - 1] = offset + w(k);
  return Permutation(img);
}

inline Word shift_word(const Word& w, int offset, int n) {
  std::vector<int> ls;
  ls.reserve(w.size());
  for (int i : w.letters) ls.push_back(i + offset);
  return Word(n, std::move(ls));
}

// Graded, then lexicographic on one-line notation.
inline bool canonical_less(const Permutation& u, const Permutation& v) {
  const int lu = u.length(), lv = v.length();
  if (lu != lv) return lu < lv;
  return u < v;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img = Permutation::identity(n).images();
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Length-d permutations of rank n in canonical order.
inline std::vector<Permutation> permutations_of_length(int n, int d) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (w.length() == d) out.push_back(w);
  return out;
}

// Every reduced word of w.
inline std::vector<Word> reduced_words(const Permutation& w) {
  std::vector<Word> out;
  std::vector<int> suffix;
  std::function<void(const Permutation&)> rec = [&](const Permutation& x) {
    if (x.is_identity()) {
      out.emplace_back(w.n(), std::vector<int>(suffix.rbegin(), suffix.rend()));
      return;
    }
    for (int i = 1; i < x.n(); ++i) {
      if (x.has_right_descent(i)) {
        suffix.push_back(i);
        rec(x.times_simple(i));
        suffix.pop_back();
      }
    }
  };
  rec(w);
  return out;
}

// Bruhat order via the tableau criterion: u <= v iff for every prefix
// length i and threshold k, #{j <= i : u(j) >= k} <= #{j <= i : v(j) >= k}.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  const int n = u.n();
  detail::require(n == v.n(), "rank mismatch in Bruhat comparison");
  std::vector<int> cu(n + 2, 0), cv(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = u(i); k >= 1; --k) ++cu[k];
    for (int k = v(i); k >= 1; --k) ++cv[k];
    for (int k = 1; k <= n; ++k)
      if (cu[k] > cv[k]) return false;
  }
  return true;
}

// u <=_L v : v = z u with l(v) = l(z) + l(u).
inline bool left_weak_leq(const Permutation& u, const Permutation& v) {
  return (v * u.inverse()).length() + u.length() == v.length();
}

// Demazure (0-Hecke) product of a word: the maximal element obtainable
// as a subword product.
inline Permutation demazure_product(const Word& w) {
  Permutation p = Permutation::identity(w.n);
  for (int i : w.letters)
    if (!p.has_right_descent(i)) p = p.times_simple(i);
  return p;
}

}  // namespace torsion

template <>
struct std::hash<torsion::Permutation> {
  std::size_t operator()(const torsion::Permutation& w) const noexcept {
    return w.hash();
  }
};

#endif  // TORSION_SYM_HPP
