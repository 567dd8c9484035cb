#ifndef TORSION_SELFTEST_HPP
#define TORSION_SELFTEST_HPP

// Compact invariant suites for every module, run by `torsion selftest`.
// The unit test binaries cover the same ground more exhaustively.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "torsion/construct.hpp"
#include "torsion/nilhecke.hpp"
#include "torsion/poly.hpp"
#include "torsion/schubert.hpp"
#include "torsion/search.hpp"
#include "torsion/sym.hpp"
#include "torsion/zaremba.hpp"

namespace torsion {

struct SelfCheck {
  std::string module;
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline IntPolynomial random_polynomial(std::mt19937_64& rng, int n, int max_deg, int terms) {
  IntPolynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    for (int i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(rng() % (max_deg + 1));
    p.add_term(e, BigInt(static_cast<int>(rng() % 21) - 10));
  }
  return p;
}

// Every operator data with the given n, Sigma l = a + b <= max_ab, built
// from items (w, a_i, b_i) that are not all trivial. Calls f on each.
inline void for_each_small_data(int n, int max_ab, int max_items,
                                const std::function<void(const OperatorData&)>& f) {
  std::vector<OperatorItem> shapes;
  for (const auto& w : all_permutations(n))
    for (int a = 0; a <= max_ab; ++a)
      for (int b = 0; a + b <= max_ab; ++b)
        if (!(w.is_identity() && a == 0 && b == 0) && w.length() <= max_ab)
          shapes.push_back({w, a, b});
  OperatorData d{n, {}};
  std::function<void(int, int)> rec = [&](int len_sum, int ab_sum) {
    if (!d.items.empty() && len_sum == ab_sum) f(d);
    if (static_cast<int>(d.items.size()) == max_items) return;
    for (const auto& s : shapes) {
      const int l = len_sum + s.w.length(), ab = ab_sum + s.a + s.b;
      if (l > max_ab || ab > max_ab) continue;
      d.items.push_back(s);
      rec(l, ab);
      d.items.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace detail

inline std::vector<SelfCheck> run_selftest() {
  std::vector<SelfCheck> out;
  auto check = [&](const std::string& module, const std::string& name,
                   const std::function<std::string()>& body) {
    SelfCheck c{module, name, false, {}};
    try {
      c.detail = body();
      c.ok = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    out.push_back(c);
  };
  std::mt19937_64 rng(20240601);

  check("sym", "braid and quadratic relations, S_5", [&] {
    const int n = 5;
    for (int i = 1; i < n; ++i) {
      const Permutation s = Permutation::simple(i, n);
      if (!(s * s).is_identity()) return std::string("s_i^2 != 1");
      if (i + 1 < n) {
        const Permutation t = Permutation::simple(i + 1, n);
        if (s * t * s != t * s * t) return std::string("braid relation fails");
      }
    }
    for (const auto& w : all_permutations(n))
      if (word_to_perm(some_reduced_word(w)) != w || !is_reduced(some_reduced_word(w)))
        return std::string("some_reduced_word is wrong");
    return std::string();
  });

  check("poly", "divided difference: nil, braid, twisted Leibniz", [&] {
    for (int t = 0; t < 100; ++t) {
      const int n = 4;
      const IntPolynomial f = detail::random_polynomial(rng, n, 3, 5);
      const IntPolynomial g = detail::random_polynomial(rng, n, 3, 5);
      for (int i = 1; i < n; ++i) {
        if (!divided_difference(i, divided_difference(i, f)).is_zero())
          return std::string("d_i^2 != 0");
        const IntPolynomial lhs = divided_difference(i, f * g);
        const IntPolynomial rhs = divided_difference(i, f) * g +
                                  act(Permutation::simple(i, n), f) * divided_difference(i, g);
        if (lhs != rhs) return std::string("twisted Leibniz fails");
        if (i + 1 < n) {
          const auto a = divided_difference(
              i, divided_difference(i + 1, divided_difference(i, f)));
          const auto b = divided_difference(
              i + 1, divided_difference(i, divided_difference(i + 1, f)));
          if (a != b) return std::string("braid relation fails");
        }
      }
    }
    return std::string();
  });

  check("nilhecke", "associativity and module action on S_3", [&] {
    const int n = 3;
    auto random_element = [&] {
      NilHeckeElement e(n);
      for (const auto& w : all_permutations(n))
        if (rng() % 2) e.add_term(w, detail::random_polynomial(rng, n, 2, 2));
      return e;
    };
    for (int t = 0; t < 20; ++t) {
      const auto x = random_element(), y = random_element(), z = random_element();
      if ((x * y) * z != x * (y * z)) return std::string("associativity fails");
      const IntPolynomial p = detail::random_polynomial(rng, n, 3, 3);
      if (act_on_poly(x * y, p) != act_on_poly(x, act_on_poly(y, p)))
        return std::string("module action is not compatible with the product");
    }
    return std::string();
  });

  check("schubert", "Chevalley formula against polynomials, n <= 4", [&] {
    for (int n = 2; n <= 4; ++n)
      for (const auto& w : all_permutations(n))
        for (int k = 1; k <= n; ++k) {
          const IntPolynomial xk = IntPolynomial::variable(k, n);
          if (chevalley_mul(xk, SchubertVector::basis(w)) != expand(xk * schubert_rep(w)))
            return "Chevalley disagrees at n = " + std::to_string(n);
        }
    return std::string();
  });

  check("schubert", "operator matrices of F, U_l, U_u", [&] {
    using V = std::vector<std::vector<BigInt>>;
    if (family_matrix(fibonacci_step()).entries != V{{1, 1}, {1, 0}})
      return std::string("F matrix");
    if (family_matrix(lower_step()).entries != V{{1, 0}, {1, 1}}) return std::string("U_l matrix");
    if (family_matrix(upper_step()).entries != V{{-1, -1}, {0, -1}})
      return std::string("U_u matrix");
    return std::string();
  });

  check("construct", "worked example: value 3 at N = 14", [&] {
    CertifyOptions opts;
    opts.nilhecke_check = true;
    const auto cert = certify(fibonacci_data(3), opts);
    if (cert.N != 14 || abs_value(cert.value) != 3) return std::string("wrong certificate");
    return std::string();
  });

  check("construct", "two evaluators, n = 2, 3, a + b <= 2", [&] {
    std::string err;
    for (int n = 2; n <= 3; ++n)
      detail::for_each_small_data(n, 2, 3, [&](const OperatorData& d) {
        if (!err.empty()) return;
        const BigInt c = operator_word_value(d);
        if (c == 0) return;
        const OperatorData nd = normalize(d);
        const BigInt s = evaluate_structured(nd), h = evaluate_nilhecke(nd);
        if (s != sign_of_a(nd.a()) * c || h != s) err = "evaluators disagree";
      });
    return err;
  });

  check("construct", "unique defect-zero subexpression, N <= 7", [&] {
    std::string err;
    for (int n = 2; n <= 3; ++n)
      detail::for_each_small_data(n, 2, 3, [&](const OperatorData& d) {
        if (!err.empty() || !is_normalized(d)) return;
        if (!is_reduced(layout_expression(d).word)) return;
        const Word w = build_expression(d);
        const auto all = defect_zero_subexpressions(w, target_element(d));
        if (all.size() != 1 || all[0].bits != defect_zero_subexpression(d, w).bits)
          err = "defect-zero subexpression not unique";
      });
    return err;
  });

  check("search", "Fibonacci family, i <= 12", [&] {
    for (int i = 1; i <= 12; ++i)
      if (operator_word_value(fibonacci_data(i)) != fibonacci(i + 1))
        return "F_{i+1} fails at i = " + std::to_string(i);
    return std::string();
  });

  check("search", "beam search finds (14,3) and (17,7)", [&] {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.seeds = parse_seeds("x1^3,x1^2*x5", 5);
    cfg.ops = parse_ops("paper8", 5);
    cfg.beam_width = 50;
    cfg.max_rank = 17;
    bool a = false, b = false;
    for (const auto& r : random_search(cfg)) {
      a = a || (r.N == 14 && r.p == 3);
      b = b || (r.N == 17 && r.p == 7);
    }
    return a && b ? std::string() : std::string("records missing");
  });

  check("zaremba", "continuant DFS equals matrix BFS, A <= 3, N <= 2000", [&] {
    for (int A = 1; A <= 3; ++A)
      if (representable_set(A, 2000) != representable_set_bfs(A, 2000))
        return "mismatch at A = " + std::to_string(A);
    if (representable_set(1, 100) != std::vector<std::uint64_t>{2, 5, 13, 34, 89})
      return std::string("Gamma_1 set");
    return std::string();
  });

  check("zaremba", "norm bound, A = 5, l_A <= 3", [&] {
    const auto scan = norm_bound_scan(5, 3);
    return scan.violations == 0 ? std::string() : std::string("violations found");
  });

  check("zaremba", "torsion bridge, words of length <= 3", [&] {
    for (int len = 1; len <= 3; ++len)
      for (int m = 0; m < (1 << len); ++m) {
        std::string w;
        for (int k = 0; k < len; ++k) w += (m >> k) & 1 ? 'R' : 'L';
        torsion_bridge(w);
      }
    return std::string();
  });
  return out;
}

}  // namespace torsion

#endif  // TORSION_SELFTEST_HPP
