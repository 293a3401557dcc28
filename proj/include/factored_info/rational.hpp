#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace factored_info {

// Exact arbitrary-precision rational, used for all polytope and
// combinatorics work. Floating point never leaks into these code paths;
// conversions to double are explicit.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Renders "a/b", or just "a" for integers.
std::string rational_to_string(const Rational& r);

// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

}  // namespace factored_info
