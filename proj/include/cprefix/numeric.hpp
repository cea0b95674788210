#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cprefix {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q" with the denominator always spelled out: "35/12", "1/1".
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cprefix
