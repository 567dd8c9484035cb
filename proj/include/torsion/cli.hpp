#ifndef TORSION_CLI_HPP
#define TORSION_CLI_HPP

// Command-line front end. run_cli parses arguments into a RunConfig and
// dispatches; everything it prints is a function of the RunConfig alone.
//
// Exit codes: 0 success, 1 invalid input, 2 integrity failure,
// 3 resource cap hit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torsion/construct.hpp"
#include "torsion/json.hpp"
#include "torsion/search.hpp"
#include "torsion/selftest.hpp"
#include "torsion/zaremba.hpp"

namespace torsion::cli {

enum ExitCode : int { Ok = 0, Invalid = 1, Integrity = 2, Resource = 3 };

struct RunConfig {
  std::string subcommand;     // eval-word, build, certify, fib, ulu, search, zaremba, selftest
  std::string zaremba_mode;   // density, primes, growth, bridge
  std::string data_path;      // operator data file
  std::string data_json;      // inline operator data
  std::string format = "json";  // json | table
  std::uint64_t rng_seed = 0;
  int workers = 1;
  int max_nh_rank = 14;
  std::uint64_t factor_effort = 1ULL << 22;
  bool nilhecke = false;
  bool split_mixed = false;
  bool with_certificates = false;
  int max_i = 20;
  std::string word;
  int n = 5;
  std::string ops = "paper8";
  std::string seeds = "x1^3,x1^2*x5";
  int max_len = 12;
  std::uint64_t iters = 0;
  int beam = 0;
  int max_rank = 0;
  int A = 5;
  std::uint64_t N = 10000;
  std::string theta = "1/2";
  int L = 40;
};

// TORSION_WORKERS, else 1.
inline int default_workers() {
  if (const char* env = std::getenv("TORSION_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (...) {
    }
  }
  return 1;
}

// "0.5", "1/2" or "1".
inline Rational parse_rational(const std::string& s) {
  static const std::regex frac(R"((\d+)/(\d+))"), dec(R"((\d*)(?:\.(\d*))?)");
  std::smatch m;
  if (std::regex_match(s, m, frac)) {
    detail::require(m[2].str() != "0" && BigInt(m[2].str()) != 0, "zero denominator");
    return Rational(BigInt(m[1].str()), BigInt(m[2].str()));
  }
  if (std::regex_match(s, m, dec) && (m[1].length() > 0 || m[2].length() > 0)) {
    const std::string ip = m[1].length() ? m[1].str() : "0";
    const std::string fp = m[2].matched ? m[2].str() : "";
    BigInt den = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
    return Rational(BigInt(ip + fp), den);
  }
  throw InvalidInput("cannot parse rational '" + s + "'");
}

namespace detail {

using json::Json;

inline OperatorData load_data(const RunConfig& cfg) {
  std::string text = cfg.data_json;
  if (!cfg.data_path.empty()) {
    std::ifstream in(cfg.data_path);
    if (!in) throw InvalidInput("cannot read " + cfg.data_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  torsion::detail::require(!text.empty(), "operator data required (--data FILE or --json TEXT)");
  const Json j = json::parse(text);
  return json::decode_operator_data(j.contains("data") ? j.at("data") : j);
}

inline Json header(const std::string& kind) {
  return {{"schema_version", json::schema_version}, {"kind", kind}};
}

inline Json with_header(const std::string& kind, const Json& body) {
  Json j = header(kind);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

inline std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// json: one compact document per line. table: "key<TAB>value" per field,
// documents separated by a blank line.
inline void emit(std::ostream& out, const RunConfig& cfg, const Json& doc) {
  if (cfg.format == "table") {
    for (const auto& [k, v] : doc.items()) out << k << '\t' << plain(v) << '\n';
    out << '\n';
  } else {
    out << doc.dump() << '\n';
  }
}

inline CertifyOptions certify_options(const RunConfig& cfg) {
  CertifyOptions o;
  o.nilhecke_check = cfg.nilhecke;
  o.limits.max_rank_pruned = cfg.max_nh_rank;
  o.factor_effort = cfg.factor_effort;
  return o;
}

inline void cmd_eval_word(const RunConfig& cfg, std::ostream& out) {
  const OperatorData d = load_data(cfg);
  const BigInt c = operator_word_value(d);
  emit(out, cfg,
       with_header("operator_value", {{"data", json::encode(d)},
                                      {"sum_length", d.total_length()},
                                      {"a", d.a()},
                                      {"b", d.b()},
                                      {"N", d.N()},
                                      {"value", json::encode(c)}}));
}

inline void cmd_build(const RunConfig& cfg, std::ostream& out) {
  const OperatorData d = normalize(load_data(cfg), cfg.split_mixed);
  const Expression ex = layout_expression(d);
  torsion::detail::ensure(is_reduced(ex.word), "constructed expression is not reduced");
  static const char* kinds[] = {"item", "lower_run", "upper_run", "longest"};
  Json segs = Json::array();
  for (const auto& s : ex.segments)
    segs.push_back({{"kind", kinds[static_cast<int>(s.kind)]},
                    {"item", s.item},
                    {"begin", s.begin},
                    {"end", s.end}});
  emit(out, cfg,
       with_header("expression", {{"data", json::encode(d)},
                                  {"N", ex.N},
                                  {"word", json::encode(ex.word)},
                                  {"length", ex.word.size()},
                                  {"reduced", true},
                                  {"x", json::encode(target_element(d))},
                                  {"segments", segs}}));
}

inline void cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const auto cert = certify(load_data(cfg), certify_options(cfg));
  emit(out, cfg, with_header("certificate", json::encode(cert)));
}

inline void cmd_fib(const RunConfig& cfg, std::ostream& out) {
  torsion::detail::require(cfg.max_i >= 1, "--max-i must be positive");
  for (int i = 1; i <= cfg.max_i; ++i) {
    const OperatorData d = fibonacci_data(i);
    const BigInt v = operator_word_value(d);
    torsion::detail::ensure(v == fibonacci(i + 1), "d_1 F^i(x_1) != F_{i+1}");
    Json j = with_header("fibonacci", {{"i", i},
                                       {"value", json::encode(v)},
                                       {"fibonacci", json::encode(fibonacci(i + 1))},
                                       {"N", d.N()},
                                       {"data", json::encode(d)}});
    if (cfg.with_certificates) j["certificate"] = json::encode(certify(d, certify_options(cfg)));
    emit(out, cfg, j);
  }
}

inline void cmd_ulu(const RunConfig& cfg, std::ostream& out) {
  const auto upper = parse_ulu_word(cfg.word);
  std::string lr;
  for (bool u : upper) lr += u ? 'R' : 'L';
  const BigMat2 gamma = gamma_product(lr);
  // operator matrix of the whole word, first letter applied first
  OperatorMatrix t = family_matrix(upper[0] ? upper_step() : lower_step());
  for (std::size_t k = 1; k < upper.size(); ++k) {
    const OperatorMatrix m = family_matrix(upper[k] ? upper_step() : lower_step());
    OperatorMatrix r = t;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.entries[i][j] = m.entries[i][0] * t.entries[0][j] +
                                                    m.entries[i][1] * t.entries[1][j];
    t = r;
  }
  Json tm = Json::array();
  for (const auto& row : t.entries) tm.push_back({json::encode(row[0]), json::encode(row[1])});
  Json entries = Json::array();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const OperatorData d = ulu_word_data(upper, r, c);
      const BigInt v = operator_word_value(d);
      const int sign = ulu_sign(upper, r);
      torsion::detail::ensure(v == sign * gamma.at(r, c), "operator value does not match gamma");
      torsion::detail::ensure(t.entries[c][r] == sign * (r == 0 ? 1 : -1) * gamma.at(r, c),
                              "operator matrix is not (-1)^{#U} gamma^T");
      entries.push_back({{"row", r},
                         {"col", c},
                         {"gamma_entry", json::encode(gamma.at(r, c))},
                         {"value", json::encode(v)},
                         {"sign", sign},
                         {"N", d.N()},
                         {"data", json::encode(d)}});
    }
  emit(out, cfg,
       with_header("ulu", {{"word", cfg.word},
                           {"gamma", json::encode(gamma)},
                           {"operator_matrix", tm},
                           {"N", 3 * static_cast<int>(upper.size()) + 5},
                           {"entries", entries}}));
}

inline void cmd_search(const RunConfig& cfg, std::ostream& out) {
  SearchConfig sc;
  sc.n = cfg.n;
  sc.ops = parse_ops(cfg.ops, cfg.n);
  sc.seeds = parse_seeds(cfg.seeds, cfg.n);
  sc.max_len = cfg.max_len;
  sc.iterations = cfg.iters;
  sc.rng_seed = cfg.rng_seed;
  sc.workers = cfg.workers;
  sc.beam_width = cfg.beam;
  sc.max_rank = cfg.max_rank;
  sc.factor_effort = std::min<std::uint64_t>(cfg.factor_effort, 1ULL << 16);
  for (const auto& r : random_search(sc))
    emit(out, cfg, with_header("search_record", json::encode(r)));
}

inline void cmd_zaremba(const RunConfig& cfg, std::ostream& out) {
  if (cfg.zaremba_mode == "density") {
    const auto d = density(cfg.A, cfg.N, cfg.workers);
    emit(out, cfg,
         with_header("zaremba_density", {{"A", d.A},
                                         {"N", d.N},
                                         {"count", d.count},
                                         {"density", json::rational_string(d.density())}}));
  } else if (cfg.zaremba_mode == "primes") {
    const auto r = prime_records(cfg.A, parse_rational(cfg.theta), cfg.N, cfg.workers);
    emit(out, cfg,
         with_header("zaremba_primes", {{"A", r.A},
                                        {"theta", json::rational_string(r.theta)},
                                        {"N", r.N},
                                        {"count", r.primes.size()},
                                        {"primes", r.primes}}));
  } else if (cfg.zaremba_mode == "growth") {
    const auto w = growth_witness(cfg.L, cfg.A, parse_rational(cfg.theta));
    emit(out, cfg, with_header("zaremba_growth", json::encode(w)));
  } else if (cfg.zaremba_mode == "bridge") {
    const auto r = torsion_bridge(cfg.word, certify_options(cfg));
    emit(out, cfg, with_header("zaremba_bridge", json::encode(r)));
  } else {
    throw InvalidInput("unknown zaremba mode '" + cfg.zaremba_mode + "'");
  }
}

inline int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& c : run_selftest()) {
    all = all && c.ok;
    checks.push_back(
        {{"module", c.module}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  emit(out, cfg, with_header("selftest", {{"passed", all}, {"checks", checks}}));
  return all ? Ok : Integrity;
}

}  // namespace detail

// Dispatches a parsed config. Exceptions map to exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    torsion::detail::require(cfg.format == "json" || cfg.format == "table",
                             "--format must be json or table");
    const std::string& s = cfg.subcommand;
    if (s == "eval-word") detail::cmd_eval_word(cfg, out);
    else if (s == "build") detail::cmd_build(cfg, out);
    else if (s == "certify") detail::cmd_certify(cfg, out);
    else if (s == "fib") detail::cmd_fib(cfg, out);
    else if (s == "ulu") detail::cmd_ulu(cfg, out);
    else if (s == "search") detail::cmd_search(cfg, out);
    else if (s == "zaremba") detail::cmd_zaremba(cfg, out);
    else if (s == "selftest") return detail::cmd_selftest(cfg, out);
    else throw InvalidInput("unknown subcommand '" + s + "'");
    return Ok;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return Invalid;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << '\n';
    return Integrity;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return Resource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return Resource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return Integrity;
  }
}

// Parses argv (without the program name) and runs.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();
  CLI::App app{"Exact Schubert calculus, nil Hecke certificates and torsion prime search"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format: json or table");

  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", cfg.data_path, "Operator data JSON file");
    sub->add_option("--json", cfg.data_json, "Inline operator data JSON");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--factor-effort", cfg.factor_effort, "Iterations per Pollard rho attempt");
    sub->add_option("--max-nh-rank", cfg.max_nh_rank, "Largest N for the nil Hecke evaluator");
  };

  auto* eval = app.add_subcommand("eval-word", "Evaluate the nested operator word C");
  add_data(eval);
  auto* build = app.add_subcommand("build", "Normalize data and build the reduced expression");
  add_data(build);
  build->add_flag("--split-mixed", cfg.split_mixed, "Split items with a_i, b_i > 0");
  auto* cert = app.add_subcommand("certify", "Full certificate pipeline");
  add_data(cert);
  add_caps(cert);
  cert->add_flag("--nilhecke", cfg.nilhecke, "Cross-check with the nil Hecke evaluator");
  auto* fib = app.add_subcommand("fib", "The Fibonacci family d_1 F^i (x_1)");
  fib->add_option("--max-i", cfg.max_i, "Largest i");
  fib->add_flag("--certify", cfg.with_certificates, "Attach certificates");
  add_caps(fib);
  auto* ulu = app.add_subcommand("ulu", "Words in U_l (L) and U_u (U or R)");
  ulu->add_option("--word", cfg.word, "Word such as LULU")->required();
  auto* search = app.add_subcommand("search", "Search for torsion records");
  search->add_option("--n", cfg.n, "Rank (4 or 5)");
  search->add_option("--ops", cfg.ops, "paper8 | paper | fib | ulu | list like 4321:x1^4,4:x5");
  search->add_option("--seeds", cfg.seeds, "Comma list of monomials in x1 and xn");
  search->add_option("--max-len", cfg.max_len, "Operators per restart (beam: per path)");
  search->add_option("--iters", cfg.iters, "Random restarts");
  search->add_option("--rng-seed", cfg.rng_seed, "Master seed");
  search->add_option("--workers", cfg.workers, "Worker threads (default $TORSION_WORKERS or 1)");
  search->add_option("--beam", cfg.beam, "Beam width; > 0 selects beam mode");
  search->add_option("--max-rank", cfg.max_rank, "Beam mode: largest N explored");
  add_caps(search);

  auto* zar = app.add_subcommand("zaremba", "Semigroup enumeration and the torsion bridge");
  zar->require_subcommand(1);
  auto* zd = zar->add_subcommand("density", "Representable count up to N");
  zd->add_option("--A", cfg.A, "Partial quotient bound");
  zd->add_option("--N", cfg.N, "Upper bound");
  zd->add_option("--workers", cfg.workers, "Worker threads");
  auto* zp = zar->add_subcommand("primes", "Representable primes in (theta N, N]");
  zp->add_option("--A", cfg.A, "Partial quotient bound");
  zp->add_option("--N", cfg.N, "Upper bound");
  zp->add_option("--theta", cfg.theta, "theta in (0,1), decimal or p/q");
  zp->add_option("--workers", cfg.workers, "Worker threads");
  auto* zg = zar->add_subcommand("growth", "Prime gamma_11 exponentially large in L");
  zg->add_option("--L", cfg.L, "Word length bound");
  zg->add_option("--A", cfg.A, "Partial quotient bound");
  zg->add_option("--theta", cfg.theta, "theta in (0,1)");
  auto* zb = zar->add_subcommand("bridge", "Certify every entry of a word in L, R");
  zb->add_option("--word", cfg.word, "Word over {L, R}")->required();
  add_caps(zb);
  app.add_subcommand("selftest", "Run the invariant suites");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Invalid;
  }
  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    for (auto* inner : sub->get_subcommands()) cfg.zaremba_mode = inner->get_name();
  }
  return run(cfg, out, err);
}

}  // namespace torsion::cli

#endif  // TORSION_CLI_HPP
