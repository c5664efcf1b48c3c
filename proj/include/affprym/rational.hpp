#ifndef AFFPRYM_RATIONAL_HPP
#define AFFPRYM_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace affprym {

// All arithmetic in this project is exact. Rationals back the cyclotomic
// coefficients and the dimension formulas; they stay tiny at desk scale but
// nothing relies on that.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline std::string rat_to_string(const Rational& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

} // namespace affprym

#endif
