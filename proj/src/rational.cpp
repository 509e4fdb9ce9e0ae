#include "stablenorm/rational.hpp"

#include <algorithm>
#include <cctype>

#include "stablenorm/error.hpp"

namespace stablenorm {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    Integer q{std::string(den)};
    if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num)), q);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_literal(text);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    value = Rational(Integer(std::string(whole)) * scale + Integer(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) bad_literal(text);
    value = Rational(Integer(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

bool is_integral(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

Rational dot(const RationalVector& lhs, const RationalVector& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "dot product of sizes " + std::to_string(lhs.size()) + " and " + std::to_string(rhs.size()));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != 0 && rhs[i] != 0) sum += lhs[i] * rhs[i];
  }
  return sum;
}

RationalVector scaled(const RationalVector& v, const Rational& factor) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * factor);
  return out;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::CircuitCapExceeded: return "CircuitCapExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegenerateBall: return "DegenerateBall";
    case ErrorKind::NonIntegralClass: return "NonIntegralClass";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::UnknownCorpusName: return "UnknownCorpusName";
  }
  return "Error";
}

}  // namespace stablenorm
