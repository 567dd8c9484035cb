#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "torsion/construct.hpp"
#include "torsion/search.hpp"
#include "torsion/zaremba.hpp"

using namespace torsion;

namespace {

SearchConfig paper_config() {
  SearchConfig cfg;
  cfg.n = 5;
  cfg.seeds = parse_seeds("x1^3,x1^2*x5", 5);
  cfg.ops = parse_ops("paper8", 5);
  return cfg;
}

std::vector<std::pair<int, BigInt>> keys(const std::vector<SearchRecord>& rs) {
  std::vector<std::pair<int, BigInt>> k;
  for (const auto& r : rs) k.emplace_back(r.N, r.p);
  return k;
}

// Re-derives a record from scratch: rank from the data, value by evaluation.
void check_record(const SearchRecord& r, int n) {
  REQUIRE(r.data.n == n);
  REQUIRE(r.N == r.data.a() + n + r.data.b());
  const BigInt v = operator_word_value(r.data);
  REQUIRE(v == r.value);
  REQUIRE(v != 0);
  REQUIRE(v % r.p == 0);
  if (r.p_is_prime) REQUIRE(is_probable_prime(r.p));
}

}  // namespace

TEST_CASE("Fibonacci family values and ranks") {
  for (int i = 1; i <= 20; ++i) {
    const OperatorData d = fibonacci_data(i);
    REQUIRE(operator_word_value(d) == oracle::fib(i + 1));
    REQUIRE(d.N() == 3 * i + 5);
  }
  CHECK(operator_word_value(fibonacci_data(10)) == 89);
  CHECK(fibonacci_data(10).N() == 35);
  CHECK(operator_word_value(fibonacci_data(1)) == 1);
  CHECK(fibonacci_data(1).N() == 8);
}

TEST_CASE("compile_steps groups steps innermost first") {
  using P = PrimitiveStep;
  const Permutation s1 = Permutation::simple(1, 4), s2 = Permutation::simple(2, 4);
  const OperatorData d =
      compile_steps(4, {P::mul_first(2), P::demazure(s1), P::demazure(s2), P::mul_last(1),
                        P::demazure(s1)});
  REQUIRE(d.items.size() == 2);
  CHECK(d.items[0] == OperatorItem{s2 * s1, 2, 0});
  CHECK(d.items[1] == OperatorItem{s1, 0, 1});
  // d_1 d_1 is zero: the second d_1 becomes its own item
  const OperatorData z = compile_steps(4, {P::mul_first(2), P::demazure(s1), P::demazure(s1)});
  CHECK(z.items.size() == 2);
  CHECK(operator_word_value(z) == 0);
}

TEST_CASE("U_l / U_u words against the 2x2 products, length <= 8") {
  for (int len = 1; len <= 8; ++len)
    for (int m = 0; m < (1 << len); ++m) {
      std::string w;
      std::vector<bool> upper;
      for (int k = 0; k < len; ++k) {
        const bool u = (m >> k) & 1;
        w += u ? 'R' : 'L';
        upper.push_back(u);
      }
      const auto g = gamma_product<std::int64_t>(w);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          const OperatorData d = ulu_word_data(upper, r, c);
          REQUIRE(d.N() == 3 * len + 5);
          const BigInt v = operator_word_value(d);
          REQUIRE(v == ulu_sign(upper, r) * BigInt(g.at(r, c)));
        }
    }
  CHECK(abs_value(operator_word_value(ulu_word_data("L"))) == 1);
  CHECK(ulu_word_data("LULU") == ulu_word_data("LRLR"));
  CHECK_THROWS_AS(ulu_word_data("LX"), InvalidInput);
}

TEST_CASE("operator parsing") {
  const auto ops = parse_ops("paper8", 5);
  REQUIRE(ops.size() == 8);
  std::vector<std::string> names;
  for (const auto& op : ops) {
    names.push_back(op.name);
    CHECK(op.is_degree_zero());
  }
  CHECK(names == std::vector<std::string>{"d4321x1^4", "d321x1^3", "d21x1^2", "d1x1",
                                          "d1234x5^4", "d234x5^3", "d34x5^2", "d4x5"});
  CHECK(parse_ops("4321:x1^4,4:x5", 5).size() == 2);
  CHECK_THROWS_AS(parse_ops("paper8", 4), InvalidInput);
  CHECK_THROWS_AS(parse_ops("11:x1^2", 5), InvalidInput);
  CHECK_THROWS_AS(parse_ops("1:x3", 5), InvalidInput);
  CHECK_THROWS_AS(parse_seeds("x2", 5), InvalidInput);
  const auto seeds = parse_seeds("x1^3,x1^2*x5", 5);
  CHECK(seeds[1].a == 2);
  CHECK(seeds[1].b == 1);
}

TEST_CASE("degree-zero check on ops") {
  SearchConfig cfg = paper_config();
  cfg.ops = parse_ops("21:x1", 5);
  cfg.iterations = 1;
  CHECK_THROWS_AS(random_search(cfg), InvalidInput);
}

TEST_CASE("zero iterations give no records") {
  SearchConfig cfg = paper_config();
  cfg.iterations = 0;
  CHECK(random_search(cfg).empty());
}

TEST_CASE("random mode with the Fibonacci operator rediscovers the family") {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.seeds = parse_seeds("x1", 4);
  cfg.ops = parse_ops("fib", 4);
  cfg.max_len = 12;
  cfg.iterations = 1;
  const auto recs = random_search(cfg);
  for (const auto& r : recs) {
    check_record(r, 4);
    const int i = static_cast<int>(r.trace.size());
    REQUIRE(r.N == 3 * i + 5);
    REQUIRE((oracle::fib(i + 1) % r.p == 0 || oracle::fib(i) % r.p == 0));
  }
  // every prime factor of F_{i+1}, 2 <= i <= 12, at rank 3i + 5 (F_{i+1} read at X_{s_1})
  for (int i = 2; i <= 12; ++i)
    for (const auto& p : factorize(oracle::fib(i + 1)).distinct_primes()) {
      bool found = false;
      for (const auto& r : recs) found = found || (r.N == 3 * i + 5 && r.p == p);
      REQUIRE(found);
    }
}

TEST_CASE("random mode: records re-verify and do not depend on workers") {
  SearchConfig cfg = paper_config();
  cfg.iterations = 400;
  cfg.max_len = 6;
  cfg.rng_seed = 99;
  cfg.workers = 1;
  const auto one = random_search(cfg);
  cfg.workers = 3;
  const auto three = random_search(cfg);
  REQUIRE(!one.empty());
  REQUIRE(keys(one) == keys(three));
  for (std::size_t k = 0; k < one.size(); ++k) {
    REQUIRE(one[k].trace == three[k].trace);
    REQUIRE(one[k].iteration == three[k].iteration);
    REQUIRE(one[k].data == three[k].data);
    check_record(one[k], 5);
  }
  REQUIRE(std::is_sorted(one.begin(), one.end(), [](const auto& x, const auto& y) {
    return std::tie(x.N, x.p) < std::tie(y.N, y.p);
  }));
  cfg.rng_seed = 100;
  CHECK(keys(random_search(cfg)) != keys(one));
}

TEST_CASE("beam mode finds the small table rows") {
  SearchConfig cfg = paper_config();
  cfg.beam_width = 100;
  cfg.max_rank = 25;
  cfg.rng_seed = 7;
  cfg.workers = 2;
  const auto recs = random_search(cfg);
  for (const auto& r : recs) check_record(r, 5);
  const std::vector<std::pair<int, int>> rows{{14, 3}, {17, 7}, {20, 13}, {22, 23}, {25, 53}};
  for (auto [N, p] : rows) {
    bool found = false;
    for (const auto& r : recs) found = found || (r.N == N && r.p == p);
    INFO("N = " << N << ", p = " << p);
    REQUIRE(found);
  }
  cfg.workers = 1;
  CHECK(keys(random_search(cfg)) == keys(recs));
}

TEST_CASE("largest primes per rank never exceed what exhaustive search allows") {
  // exhaustive over all op sequences up to rank 17 from both seeds
  SearchConfig cfg = paper_config();
  cfg.beam_width = 1 << 30;
  cfg.max_rank = 17;
  const auto recs = random_search(cfg);
  std::map<int, BigInt> best;
  for (const auto& r : recs) best[r.N] = std::max(best[r.N], r.p);
  CHECK(best[14] == 3);
  CHECK(best[17] == 7);
}
