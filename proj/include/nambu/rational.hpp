#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace nambu {

// Exact scalar field of the whole engine. boost::multiprecision keeps values
// in lowest terms with a positive denominator, so "equals zero" is a plain
// comparison. No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (optional leading minus). Throws ParseError on garbage
// or zero denominator.
Rational parse_rational(const std::string& text);

// Renders "p/q", or just "p" when the denominator is 1. Deterministic; used
// verbatim in report files.
std::string rational_str(const Rational& r);

}  // namespace nambu
