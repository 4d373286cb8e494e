#ifndef SSX_SCALAR_HPP
#define SSX_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "ssx/errors.hpp"

namespace ssx {

// Exact scalar kind.  All accuracy-through-order solves that start from
// rational inputs stay in this type; floats are used everywhere else.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(double x) { return x; }

template <typename S>
S scalar_from_int(long long n) {
    return S(n);
}

// "p/q" or plain integer string -> Rational.  Decimal strings ("0.25",
// "-1.7e-3") are accepted too, since corpus files mix both.
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& q);

// pow with a real exponent; the rational overload converts through double
// (used only on evaluation paths, never in exact series arithmetic).
inline double real_pow(double base, double expo) { return std::pow(base, expo); }

} // namespace ssx

#endif
