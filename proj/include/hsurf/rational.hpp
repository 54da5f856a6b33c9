#ifndef HSURF_RATIONAL_HPP
#define HSURF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hsurf {

// Arbitrary-precision integers and rationals for every formula evaluation.
// cpp_rational keeps values canonical by construction: gcd(num, den) = 1,
// den > 0, zero stored as 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer pow_int(const Integer& base, unsigned exp) {
    Integer acc = 1;
    Integer b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hsurf

#endif
