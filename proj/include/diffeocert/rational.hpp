#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace diffeocert {

/// Exact rational scalar used throughout the engine.  All algebraic and
/// geometric decisions are made over Q; floating point only ever appears in
/// advisory "hint" fields of reports.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parse "p", "-p" or "p/q" (q > 0 after normalization).  Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: lowest terms, "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// Exact integer power with the convention 0^0 = 1.
Rational rational_pow(const Rational& base, unsigned long long exponent);

/// Least common multiple of the denominators of a list of rationals
/// (1 for an empty list).  Used to clear exponents in circuit numbers.
Integer denominator_lcm(const std::vector<Rational>& values);

/// Rounded double approximation, for report hints only.
double to_double_hint(const Rational& value);

}  // namespace diffeocert
