#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace reflgrp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace reflgrp
