#ifndef TORSION_JSON_HPP
#define TORSION_JSON_HPP

// JSON encodings. Big integers are decimal strings, permutations are
// one-line arrays, words are letter arrays. Every top-level document carries
// "schema_version".

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "torsion/construct.hpp"
#include "torsion/operator_data.hpp"
#include "torsion/search.hpp"
#include "torsion/zaremba.hpp"

namespace torsion::json {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline Json encode(const Permutation& w) { return w.images(); }
inline Json encode(const Word& w) { return w.letters; }
inline Json encode(const BigInt& v) { return to_decimal(v); }

inline Json encode(const OperatorData& d) {
  Json items = Json::array();
  for (const auto& it : d.items) items.push_back({{"w", encode(it.w)}, {"a", it.a}, {"b", it.b}});
  return {{"n", d.n}, {"items", items}};
}

inline Json encode(const Factorization& f) {
  Json ps = Json::array(), cs = Json::array();
  for (const auto& p : f.primes) ps.push_back(to_decimal(p));
  for (const auto& c : f.composites) cs.push_back(to_decimal(c));
  return {{"primes", ps}, {"composites", cs}, {"complete", f.complete()}};
}

inline Json encode(const Subexpression& s) {
  return {{"bits", s.bits}, {"decorated", s.decorated()}, {"defect", s.defect},
          {"value", encode(s.value)}};
}

inline Json encode(const TorsionCertificate& c) {
  return {{"data", encode(c.data)},
          {"n", c.data.n},
          {"a", c.data.a()},
          {"b", c.data.b()},
          {"N", c.N},
          {"word", encode(c.word)},
          {"length", c.word.size()},
          {"x", encode(c.x)},
          {"value", encode(c.value)},
          {"factors", encode(c.factors)},
          {"defect_zero", encode(c.defect_zero)},
          {"nilhecke_checked", c.nilhecke_checked}};
}

inline Json encode(const SearchRecord& r) {
  return {{"N", r.N},
          {"p", encode(r.p)},
          {"p_is_prime", r.p_is_prime},
          {"value", encode(r.value)},
          {"seed", r.seed},
          {"trace", r.trace},
          {"coefficient_of", encode(r.coefficient_of)},
          {"iteration", r.iteration},
          {"step", r.step},
          {"data", encode(r.data)}};
}

template <class T>
Json encode(const Mat2<T>& m) {
  return Json::array({Json::array({encode(BigInt(m.m11)), encode(BigInt(m.m12))}),
                      Json::array({encode(BigInt(m.m21)), encode(BigInt(m.m22))})});
}

inline Json encode(const BridgeReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"row", e.row},
                       {"col", e.col},
                       {"gamma_entry", encode(e.gamma_entry)},
                       {"operator_sign", e.sign},
                       {"certificate", encode(e.certificate)}});
  return {{"word", r.word}, {"gamma", encode(r.gamma)}, {"N", r.N}, {"entries", entries}};
}

inline std::string rational_string(const Rational& q) {
  std::string s = to_decimal(boost::multiprecision::numerator(q));
  if (boost::multiprecision::denominator(q) != 1)
    s += "/" + to_decimal(boost::multiprecision::denominator(q));
  return s;
}

inline Json encode(const GrowthWitness& w) {
  Json pairs = Json::array();
  for (auto [a, b] : w.pair_word) pairs.push_back(Json::array({a, b}));
  return {{"L", w.L},
          {"A", w.A},
          {"theta", rational_string(w.theta)},
          {"interval", Json::array({w.lower, w.upper})},
          {"p", encode(w.p)},
          {"pair_word", pairs},
          {"word", w.word},
          {"length", w.length},
          {"length_A", w.length_a},
          {"gamma", encode(w.gamma)},
          {"torsion_rank", 3 * w.length + 5}};
}

// ---- decoding -------------------------------------------------------------

inline Permutation decode_permutation(const Json& j) {
  if (!j.is_array()) throw InvalidInput("permutation must be a one-line array");
  return Permutation(j.get<std::vector<int>>());
}

// Items take either "w" (one-line notation) or "word" (letters, rank n).
inline OperatorData decode_operator_data(const Json& j) {
  try {
    OperatorData d;
    d.n = j.at("n").get<int>();
    detail::require(d.n >= 2, "operator data needs n >= 2");
    for (const auto& it : j.at("items")) {
      OperatorItem item{Permutation::identity(d.n), it.value("a", 0), it.value("b", 0)};
      if (it.contains("w")) {
        item.w = decode_permutation(it.at("w"));
      } else if (it.contains("word")) {
        const Word w(d.n, it.at("word").get<std::vector<int>>());
        detail::require(is_reduced(w), "item word is not reduced");
        item.w = word_to_perm(w);
      }
      detail::require(item.w.n() == d.n, "item permutation has the wrong rank");
      detail::require(item.a >= 0 && item.b >= 0, "exponents must be nonnegative");
      d.items.push_back(item);
    }
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed operator data: ") + e.what());
  }
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace torsion::json

#endif  // TORSION_JSON_HPP
