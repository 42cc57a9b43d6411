// integers.hpp -- exact integer and rational scalar types.
//
// All arithmetic in this library is exact; there is no floating point
// anywhere.  Coefficients of polynomials are arbitrary-precision integers,
// linear algebra runs over arbitrary-precision rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline std::string int_to_string(const Int& z) { return z.str(); }

inline Int int_from_string(const std::string& s) { return Int(s); }

inline std::string rat_to_string(const Rat& r) {
    if (is_integral(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace kp
