#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace stablenorm {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Parses "p/q" (q > 0), an integer, or a finite decimal such as "1.25".
/// Throws Error(ErrorKind::Parse) on anything else, including exponents.
Rational parse_rational(std::string_view text);

/// Always "p/q", with the sign on the numerator and q >= 1.
std::string to_string(const Rational& value);

bool is_integral(const Rational& value);

Rational dot(const RationalVector& lhs, const RationalVector& rhs);

RationalVector scaled(const RationalVector& v, const Rational& factor);

}  // namespace stablenorm
