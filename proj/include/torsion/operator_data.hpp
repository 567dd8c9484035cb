#ifndef TORSION_OPERATOR_DATA_HPP
#define TORSION_OPERATOR_DATA_HPP

#include <string>
#include <vector>

#include "torsion/errors.hpp"
#include "torsion/sym.hpp"

namespace torsion {

// One nesting level d_{w}(x_1^a x_n^b . inner).
struct OperatorItem {
  Permutation w;
  int a = 0;
  int b = 0;

  friend bool operator==(const OperatorItem&, const OperatorItem&) = default;
};

// The nested operator word
//   C = d_{w_m}(x_1^{a_m} x_n^{b_m} d_{w_{m-1}}( ... d_{w_1}(x_1^{a_1} x_n^{b_1}) ... ))
// with items stored innermost first: items[0] is (w_1, a_1, b_1).
struct OperatorData {
  int n = 2;
  std::vector<OperatorItem> items;

  int a() const {
    int s = 0;
    for (const auto& it : items) s += it.a;
    return s;
  }
  int b() const {
    int s = 0;
    for (const auto& it : items) s += it.b;
    return s;
  }
  int total_length() const {
    int s = 0;
    for (const auto& it : items) s += it.w.length();
    return s;
  }
  // Rank of the ambient group in which the expression is built.
  int N() const { return a() + n + b(); }

  void validate() const {
    detail::require(n >= 2, "operator data needs n >= 2");
    for (const auto& it : items) {
      detail::require(it.w.n() == n, "item permutation has wrong rank");
      detail::require(it.a >= 0 && it.b >= 0, "exponents must be nonnegative");
    }
  }

  void check_degree() const {
    validate();
    if (total_length() != a() + b()) {
      throw InvalidInput("degree condition violated: sum of lengths l(w_i) = " +
                         std::to_string(total_length()) + " but a = " +
                         std::to_string(a()) + ", b = " + std::to_string(b()) +
                         " (need sum l(w_i) = a + b)");
    }
  }

  friend bool operator==(const OperatorData&, const OperatorData&) = default;
};

}  // namespace torsion

#endif  // TORSION_OPERATOR_DATA_HPP
