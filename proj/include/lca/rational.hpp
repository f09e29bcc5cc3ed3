#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lca {

// Exact arbitrary-precision rational, always stored canonically
// (gcd(num,den)=1, den>0). Expression templates are disabled so values
// can be stored in containers without surprises.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

// Renders `num/den`, suppressing `/1`.
inline std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

}  // namespace lca
