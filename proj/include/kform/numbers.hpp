#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kform {

// All integer arithmetic in the library is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

// cpp_int division truncates toward zero; HNF reduction needs floor semantics.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace kform
