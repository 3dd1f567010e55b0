#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ulis {

// Counts and series coefficients are exact and unbounded everywhere; no
// intermediate value is allowed to saturate or round.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Integer& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace ulis
