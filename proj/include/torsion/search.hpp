#ifndef TORSION_SEARCH_HPP
#define TORSION_SEARCH_HPP

// Families of degree-zero operators on the coinvariant ring and a random
// search for large primes among their Schubert coefficients.
//
// A hit is a coefficient c of X_v in op_k ... op_1(seed). Appending d_{v^-1}
// turns it into operator data with value exactly c, so every prime p | c
// gives a record (N, p) with N = a + n + b.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "torsion/bigint.hpp"
#include "torsion/errors.hpp"
#include "torsion/factor.hpp"
#include "torsion/operator_data.hpp"
#include "torsion/poly.hpp"
#include "torsion/schubert.hpp"
#include "torsion/sym.hpp"

namespace torsion {

// Groups a flat step sequence into items (w_i, a_i, b_i), innermost first.
// Multiplications after a Demazure step open a new item; consecutive
// Demazure steps merge when the product is length-additive and otherwise
// become an item with a = b = 0 (the value is then zero).
inline OperatorData compile_steps(int n, const std::vector<PrimitiveStep>& steps) {
  OperatorData data{n, {}};
  const Permutation id = Permutation::identity(n);
  OperatorItem cur{id, 0, 0};
  bool has_demazure = false, open = false;
  for (const auto& s : steps) {
    switch (s.kind) {
      case PrimitiveStep::Kind::MulFirst:
      case PrimitiveStep::Kind::MulLast:
        detail::require(s.power >= 0, "negative multiplication power");
        if (has_demazure) {
          data.items.push_back(cur);
          cur = {id, 0, 0};
          has_demazure = false;
        }
        (s.kind == PrimitiveStep::Kind::MulFirst ? cur.a : cur.b) += s.power;
        open = true;
        break;
      case PrimitiveStep::Kind::Demazure: {
        detail::require(s.w.n() == n, "Demazure step rank mismatch");
        const Permutation w = s.w * cur.w;
        if (w.length() == s.w.length() + cur.w.length()) {
          cur.w = w;
        } else {
          data.items.push_back(cur);
          cur = {s.w, 0, 0};
        }
        has_demazure = true;
        open = true;
        break;
      }
    }
  }
  if (open) data.items.push_back(cur);
  return data;
}

inline std::vector<PrimitiveStep> flatten(const std::vector<OperatorStep>& ops) {
  std::vector<PrimitiveStep> out;
  for (const auto& op : ops) out.insert(out.end(), op.parts.begin(), op.parts.end());
  return out;
}

// ---- n = 4 families -------------------------------------------------------

// h -> d_{23}(x_4^2 d_1(x_1 h))
inline OperatorStep fibonacci_step() {
  OperatorStep op{"F", {}};
  op.parts = {PrimitiveStep::mul_first(1), PrimitiveStep::demazure(Permutation::simple(1, 4)),
              PrimitiveStep::mul_last(2),
              PrimitiveStep::demazure(Permutation::simple(2, 4) * Permutation::simple(3, 4))};
  return op;
}

// h -> d_{21}(x_1^2 d_1(x_1 h))
inline OperatorStep lower_step() {
  OperatorStep op{"Ul", {}};
  op.parts = {PrimitiveStep::mul_first(1), PrimitiveStep::demazure(Permutation::simple(1, 4)),
              PrimitiveStep::mul_first(2),
              PrimitiveStep::demazure(Permutation::simple(2, 4) * Permutation::simple(1, 4))};
  return op;
}

// h -> d_{23}(x_4^2 d_3(x_4 h))
inline OperatorStep upper_step() {
  OperatorStep op{"Uu", {}};
  op.parts = {PrimitiveStep::mul_last(1), PrimitiveStep::demazure(Permutation::simple(3, 4)),
              PrimitiveStep::mul_last(2),
              PrimitiveStep::demazure(Permutation::simple(2, 4) * Permutation::simple(3, 4))};
  return op;
}

// Matrix of an n = 4 operator on span{X_{s_1}, X_{s_3}}, which it preserves.
inline OperatorMatrix family_matrix(const OperatorStep& op) {
  return operator_matrix(op, 1, 4).restrict_to({Permutation::simple(1, 4), Permutation::simple(3, 4)});
}

// d_1 F^i (x_1); value F_{i+1}.
inline OperatorData fibonacci_data(int i) {
  detail::require(i >= 1, "fibonacci_data needs i >= 1");
  std::vector<PrimitiveStep> steps{PrimitiveStep::mul_first(1)};
  const OperatorStep f = fibonacci_step();
  for (int k = 0; k < i; ++k) steps.insert(steps.end(), f.parts.begin(), f.parts.end());
  steps.push_back(PrimitiveStep::demazure(Permutation::simple(1, 4)));
  return compile_steps(4, steps);
}

// Letters: 'L' for U_l; 'U' or 'R' for U_u.
inline std::vector<bool> parse_ulu_word(const std::string& word) {
  detail::require(!word.empty(), "word must be nonempty");
  std::vector<bool> upper;
  for (char ch : word) {
    if (ch == 'L' || ch == 'l')
      upper.push_back(false);
    else if (ch == 'U' || ch == 'u' || ch == 'R' || ch == 'r')
      upper.push_back(true);
    else
      throw InvalidInput(std::string("word letters must be L or U/R, got '") + ch + "'");
  }
  return upper;
}

// Operator data whose value is +-gamma_{row,col}, gamma the product of
// L = [[1,1],[0,1]] and R = [[1,0],[1,1]] in word order. Indices are 0-based.
//
// On span{X_{s_1}, X_{s_3}}, U_l acts as R^T and U_u as -L^T; applying the
// operators in reading order gives T = (-1)^{#R} gamma^T. Seeding X_{s_1} by
// x_1 or -X_{s_3} by x_4 picks a column of T, and d_1 or d_3 a row.
inline OperatorData ulu_word_data(const std::vector<bool>& upper, int row = 0, int col = 0) {
  detail::require(!upper.empty(), "word must be nonempty");
  detail::require(row >= 0 && row < 2 && col >= 0 && col < 2, "entry index must be 0 or 1");
  std::vector<PrimitiveStep> steps;
  steps.push_back(row == 0 ? PrimitiveStep::mul_first(1) : PrimitiveStep::mul_last(1));
  const OperatorStep lo = lower_step(), up = upper_step();
  for (bool u : upper) {
    const auto& op = u ? up : lo;
    steps.insert(steps.end(), op.parts.begin(), op.parts.end());
  }
  steps.push_back(PrimitiveStep::demazure(Permutation::simple(col == 0 ? 1 : 3, 4)));
  return compile_steps(4, steps);
}

inline OperatorData ulu_word_data(const std::string& word, int row = 0, int col = 0) {
  return ulu_word_data(parse_ulu_word(word), row, col);
}

// Sign s with operator value = s * gamma_{row,col}.
inline int ulu_sign(const std::vector<bool>& upper, int row) {
  int s = row == 0 ? 1 : -1;
  for (bool u : upper)
    if (u) s = -s;
  return s;
}

// ---- operator sets --------------------------------------------------------

inline std::string power_suffix(int k) { return k == 1 ? "" : "^" + std::to_string(k); }

// d_{i_1 ... i_k} x^k for x = x_1 with word k, k-1, ..., 1, and for x = x_n
// with word n-k, ..., n-1.
inline std::vector<OperatorStep> paper_operators(int n) {
  detail::require(n >= 2, "rank must be at least 2");
  std::vector<OperatorStep> ops;
  for (int k = n - 1; k >= 1; --k) {
    Permutation w = Permutation::identity(n);
    std::string name = "d";
    for (int i = k; i >= 1; --i) {
      w = w.times_simple(i);
      name += std::to_string(i);
    }
    ops.push_back(OperatorStep::demazure_of_power(Variable::First, k, w,
                                                  name + "x1" + power_suffix(k)));
  }
  for (int k = n - 1; k >= 1; --k) {
    Permutation w = Permutation::identity(n);
    std::string name = "d";
    for (int i = n - k; i <= n - 1; ++i) {
      w = w.times_simple(i);
      name += std::to_string(i);
    }
    ops.push_back(OperatorStep::demazure_of_power(
        Variable::Last, k, w, name + "x" + std::to_string(n) + power_suffix(k)));
  }
  return ops;
}

// "paper8" (n = 5) or more generally "paper", "fib", "ulu" (n = 4), or a
// comma list of "<letters>:x<1|n>^<k>" such as "4321:x1^4".
inline std::vector<OperatorStep> parse_ops(const std::string& spec, int n) {
  if (spec == "paper8" || spec == "paper") {
    detail::require(spec != "paper8" || n == 5, "paper8 operators live in rank 5");
    return paper_operators(n);
  }
  if (spec == "fib") {
    detail::require(n == 4, "fib operator lives in rank 4");
    return {fibonacci_step()};
  }
  if (spec == "ulu") {
    detail::require(n == 4, "ulu operators live in rank 4");
    return {lower_step(), upper_step()};
  }
  std::vector<OperatorStep> ops;
  std::stringstream ss(spec);
  std::string tok;
  static const std::regex re(R"((\d+):x(\d+)(?:\^(\d+))?)");
  while (std::getline(ss, tok, ',')) {
    std::smatch m;
    if (!std::regex_match(tok, m, re))
      throw InvalidInput("cannot parse operator '" + tok + "'");
    std::vector<int> letters;
    for (char ch : m[1].str()) letters.push_back(ch - '0');
    const Word w(n, letters);
    detail::require(is_reduced(w), "operator word '" + m[1].str() + "' is not reduced");
    const int var = std::stoi(m[2].str());
    detail::require(var == 1 || var == n, "operators multiply by x_1 or x_n only");
    const int k = m[3].matched ? std::stoi(m[3].str()) : 1;
    ops.push_back(OperatorStep::demazure_of_power(var == 1 ? Variable::First : Variable::Last, k,
                                                  word_to_perm(w), "d" + tok));
  }
  detail::require(!ops.empty(), "empty operator list");
  return ops;
}

// A starting monomial x_1^a x_n^b.
struct SeedMonomial {
  int a = 0, b = 0;
  std::string text;
};

inline SeedMonomial parse_seed(const std::string& text, int n) {
  SeedMonomial s{0, 0, text};
  if (text == "1") return s;
  std::stringstream ss(text);
  std::string factor;
  static const std::regex re(R"(x(\d+)(?:\^(\d+))?)");
  while (std::getline(ss, factor, '*')) {
    std::smatch m;
    if (!std::regex_match(factor, m, re))
      throw InvalidInput("cannot parse seed factor '" + factor + "'");
    const int var = std::stoi(m[1].str());
    const int k = m[2].matched ? std::stoi(m[2].str()) : 1;
    detail::require(var == 1 || var == n, "seeds are monomials in x_1 and x_n");
    (var == 1 ? s.a : s.b) += k;
  }
  return s;
}

inline std::vector<SeedMonomial> parse_seeds(const std::string& list, int n) {
  std::vector<SeedMonomial> seeds;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) seeds.push_back(parse_seed(tok, n));
  detail::require(!seeds.empty(), "empty seed list");
  return seeds;
}

inline SchubertVector seed_vector(const SeedMonomial& s, int n) {
  SchubertVector v = SchubertVector::basis(Permutation::identity(n));
  v = mul_power(v, Variable::First, s.a);
  return mul_power(v, Variable::Last, s.b);
}

// ---- random search --------------------------------------------------------

struct SearchRecord {
  int N = 0;
  BigInt p;
  OperatorData data;
  std::string seed;
  std::vector<std::string> trace;  // operator names, first applied first
  Permutation coefficient_of;      // the X_v that was read
  BigInt value;                    // operator_word_value(data)
  bool p_is_prime = true;          // false for an unsplit cofactor
  std::uint64_t iteration = 0;
  int step = 0;
};

struct SearchConfig {
  int n = 5;
  std::vector<SeedMonomial> seeds;
  std::vector<OperatorStep> ops;
  int max_len = 12;
  std::uint64_t iterations = 0;
  std::uint64_t rng_seed = 0;
  int workers = 1;
  int beam_width = 0;  // > 0 selects beam mode
  int max_rank = 0;    // beam mode: largest N explored, 0 for no bound
  std::uint64_t factor_effort = 1ULL << 16;
};

namespace detail {

struct Hit {
  int N;
  BigInt p;
  std::uint64_t iteration;
  int step;
  std::size_t seed;
  std::vector<int> trace;
  Permutation v;
  BigInt c;
};

using HitKey = std::pair<int, BigInt>;

// Keeps the earliest (iteration, step) hit for each (N, p).
inline void offer(std::map<HitKey, Hit>& best, Hit h) {
  HitKey key{h.N, h.p};
  auto it = best.find(key);
  if (it == best.end()) {
    best.emplace(std::move(key), std::move(h));
  } else if (std::tie(h.iteration, h.step) < std::tie(it->second.iteration, it->second.step)) {
    it->second = std::move(h);
  }
}

struct Prepared {
  std::vector<SchubertVector> seed_vectors;
  std::vector<int> seed_degrees;
  std::map<int, std::vector<OperatorMatrix>> matrices;  // by degree
};

inline Prepared prepare(const SearchConfig& cfg) {
  Prepared pr;
  for (const auto& op : cfg.ops) {
    require(op.is_degree_zero(), "operator " + op.name + " is not of degree zero");
    for (const auto& part : op.parts)
      require(part.kind != PrimitiveStep::Kind::Demazure || part.w.n() == cfg.n,
              "operator " + op.name + " has the wrong rank");
  }
  for (const auto& s : cfg.seeds) {
    pr.seed_vectors.push_back(seed_vector(s, cfg.n));
    const int d = s.a + s.b;
    pr.seed_degrees.push_back(d);
    if (!pr.matrices.count(d)) {
      auto& ms = pr.matrices[d];
      for (const auto& op : cfg.ops) ms.push_back(operator_matrix(op, d, cfg.n));
    }
  }
  return pr;
}

inline int op_weight(const OperatorStep& op) {
  int w = 0;
  for (const auto& part : op.parts)
    if (part.kind != PrimitiveStep::Kind::Demazure) w += part.power;
  return w;
}

inline void harvest(const SearchConfig& cfg, const SchubertVector& v, std::size_t seed,
                    const std::vector<int>& trace, std::uint64_t iteration, int step,
                    std::map<HitKey, Hit>& best) {
  int N = cfg.n + cfg.seeds[seed].a + cfg.seeds[seed].b;
  for (int k : trace) N += op_weight(cfg.ops[k]);
  for (const auto& [w, c] : v.coeffs()) {
    const BigInt m = abs_value(c);
    if (m < 2) continue;
    const Factorization f = factorize(m, cfg.factor_effort);
    for (const auto& p : f.distinct_primes())
      offer(best, Hit{N, p, iteration, step, seed, trace, w, c});
    for (const auto& q : f.composites)
      offer(best, Hit{N, q, iteration, step, seed, trace, w, c});
  }
}

inline std::mt19937_64 iteration_rng(std::uint64_t seed, std::uint64_t iteration) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration),
                    static_cast<std::uint32_t>(iteration >> 32)};
  return std::mt19937_64(seq);
}

// One restart: a uniformly chosen seed followed by max_len uniform ops,
// inspecting the vector after every op.
inline void run_iteration(const SearchConfig& cfg, const Prepared& pr, std::uint64_t iteration,
                          std::map<HitKey, Hit>& best) {
  auto rng = iteration_rng(cfg.rng_seed, iteration);
  const std::size_t seed = rng() % cfg.seeds.size();
  SchubertVector v = pr.seed_vectors[seed];
  const auto& mats = pr.matrices.at(pr.seed_degrees[seed]);
  std::vector<int> trace;
  for (int step = 1; step <= cfg.max_len; ++step) {
    const int k = static_cast<int>(rng() % cfg.ops.size());
    trace.push_back(k);
    v = mats[k].apply(v);
    if (v.is_zero()) break;
    harvest(cfg, v, seed, trace, iteration, step, best);
  }
}

inline BigInt largest_prime_score(const SchubertVector& v, std::uint64_t effort) {
  BigInt best = 0;
  for (const auto& [w, c] : v.coeffs()) {
    if (abs_value(c) < 2) continue;
    const Factorization f = factorize(c, effort);
    best = std::max(best, f.largest_prime());
  }
  return best;
}

// Runs body(i, worker) for i in [0, count), strided over the workers.
template <class Body>
void parallel_for(int workers, std::size_t count, Body body) {
  workers = std::max(1, workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Beam over ranks. Distinct vectors are grouped by the rank N that reading
// one of their coefficients certifies; levels are processed in increasing N.
// Every state of a level is harvested, then the beam_width states whose
// coefficients have the largest prime factors (ties in seeded random order)
// are extended by every op. A vector reached along several paths keeps the
// shortest, then lexicographically smallest, path.
inline void run_beam(const SearchConfig& cfg, const Prepared& pr, std::map<HitKey, Hit>& best) {
  struct Node {
    std::size_t seed;
    std::vector<int> trace;
    SchubertVector v;
  };
  using Key = std::vector<std::pair<Permutation, BigInt>>;
  auto path_less = [](const Node& x, const Node& y) {
    return std::make_tuple(x.trace.size(), x.seed, std::cref(x.trace)) <
           std::make_tuple(y.trace.size(), y.seed, std::cref(y.trace));
  };
  std::map<int, std::map<Key, Node>> levels;
  auto insert = [&](int N, Node node) {
    Key key(node.v.coeffs().begin(), node.v.coeffs().end());
    auto& lvl = levels[N];
    auto it = lvl.find(key);
    if (it == lvl.end())
      lvl.emplace(std::move(key), std::move(node));
    else if (path_less(node, it->second))
      it->second = std::move(node);
  };
  std::vector<int> weights;
  for (const auto& op : cfg.ops) weights.push_back(op_weight(op));
  for (std::size_t s = 0; s < cfg.seeds.size(); ++s)
    insert(cfg.n + cfg.seeds[s].a + cfg.seeds[s].b, {s, {}, pr.seed_vectors[s]});

  std::uint64_t serial = 0;
  while (!levels.empty()) {
    auto first = levels.begin();
    const int N = first->first;
    std::vector<Node> nodes;
    for (auto& [k, node] : first->second) nodes.push_back(std::move(node));
    levels.erase(first);
    if (cfg.max_rank > 0 && N > cfg.max_rank) break;

    std::vector<BigInt> score(nodes.size());
    std::vector<std::map<HitKey, Hit>> partial(std::max(1, cfg.workers));
    parallel_for(cfg.workers, nodes.size(), [&](std::size_t i, int w) {
      if (!nodes[i].trace.empty())
        harvest(cfg, nodes[i].v, nodes[i].seed, nodes[i].trace, serial + i,
                static_cast<int>(nodes[i].trace.size()), partial[w]);
      score[i] = largest_prime_score(nodes[i].v, cfg.factor_effort);
    });
    for (auto& part : partial)
      for (auto& [k, h] : part) offer(best, std::move(h));
    serial += nodes.size();

    auto rng = iteration_rng(cfg.rng_seed, static_cast<std::uint64_t>(N));
    std::vector<std::tuple<BigInt, std::uint64_t, std::size_t>> order;
    for (std::size_t i = 0; i < nodes.size(); ++i) order.emplace_back(score[i], rng(), i);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      return std::tie(std::get<0>(y), std::get<1>(x)) < std::tie(std::get<0>(x), std::get<1>(y));
    });
    const std::size_t keep = std::min(order.size(), static_cast<std::size_t>(cfg.beam_width));
    for (std::size_t r = 0; r < keep; ++r) {
      const Node& node = nodes[std::get<2>(order[r])];
      if (static_cast<int>(node.trace.size()) >= cfg.max_len) continue;
      const auto& mats = pr.matrices.at(pr.seed_degrees[node.seed]);
      for (std::size_t k = 0; k < cfg.ops.size(); ++k) {
        const int child_rank = N + weights[k];
        if (cfg.max_rank > 0 && child_rank > cfg.max_rank) continue;
        Node child{node.seed, node.trace, mats[k].apply(node.v)};
        if (child.v.is_zero()) continue;
        child.trace.push_back(static_cast<int>(k));
        insert(child_rank, std::move(child));
      }
    }
  }
}

inline SearchRecord materialize(const SearchConfig& cfg, const Hit& h) {
  SearchRecord r;
  r.N = h.N;
  r.p = h.p;
  r.seed = cfg.seeds[h.seed].text;
  r.iteration = h.iteration;
  r.step = h.step;
  r.coefficient_of = h.v;
  r.p_is_prime = is_probable_prime(h.p);
  std::vector<PrimitiveStep> steps;
  if (cfg.seeds[h.seed].a) steps.push_back(PrimitiveStep::mul_first(cfg.seeds[h.seed].a));
  if (cfg.seeds[h.seed].b) steps.push_back(PrimitiveStep::mul_last(cfg.seeds[h.seed].b));
  for (int k : h.trace) {
    r.trace.push_back(cfg.ops[k].name);
    steps.insert(steps.end(), cfg.ops[k].parts.begin(), cfg.ops[k].parts.end());
  }
  steps.push_back(PrimitiveStep::demazure(h.v.inverse()));
  r.data = compile_steps(cfg.n, steps);
  r.data.check_degree();
  // Independent recomputation in the polynomial ring.
  r.value = operator_word_value(r.data);
  ensure(r.value == h.c, "closed operator word disagrees with the Schubert coefficient");
  ensure(r.value % r.p == 0, "recorded prime does not divide the operator value");
  ensure(r.N == r.data.N(), "rank accounting mismatch");
  return r;
}

}  // namespace detail

// Records sorted by (N, p), one per pair, each the earliest hit by
// (iteration, step). Output depends only on the config, not on workers.
inline std::vector<SearchRecord> random_search(const SearchConfig& cfg) {
  detail::require(cfg.n >= 2, "rank must be at least 2");
  detail::require(!cfg.ops.empty(), "invalid op list: empty");
  detail::require(!cfg.seeds.empty(), "empty seed list");
  detail::require(cfg.max_len >= 1, "max_len must be positive");
  const detail::Prepared pr = detail::prepare(cfg);
  std::map<detail::HitKey, detail::Hit> best;
  if (cfg.beam_width > 0) {
    detail::run_beam(cfg, pr, best);
  } else if (cfg.iterations > 0) {
    const int workers = std::max(1, cfg.workers);
    std::vector<std::map<detail::HitKey, detail::Hit>> partial(workers);
    detail::parallel_for(workers, cfg.iterations, [&](std::size_t it, int w) {
      detail::run_iteration(cfg, pr, it, partial[w]);
    });
    for (auto& part : partial)
      for (auto& [k, h] : part) detail::offer(best, std::move(h));
  }
  std::vector<SearchRecord> out;
  out.reserve(best.size());
  for (const auto& [k, h] : best) out.push_back(detail::materialize(cfg, h));
  return out;
}

}  // namespace torsion

#endif  // TORSION_SEARCH_HPP
