#ifndef TORSION_BIGINT_HPP
#define TORSION_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace torsion {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

inline BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace torsion

#endif  // TORSION_BIGINT_HPP
