#include "polyspace/rational.hpp"

#include <algorithm>
#include <cctype>

#include "polyspace/errors.hpp"

namespace polyspace {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NonGeneric: return "non-generic length vector";
    case ErrorKind::DegreeMismatch: return "degree mismatch";
    case ErrorKind::ParityViolation: return "parity violation";
    case ErrorKind::Range: return "out of range";
    case ErrorKind::Capacity: return "capacity exceeded";
    case ErrorKind::EvenM: return "even m";
    case ErrorKind::EngineMismatch: return "engine mismatch";
  }
  return "unknown error";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::Parse,
                "not a rational literal: '" + std::string(original) + "'");
  }
  Integer n(std::string(num), 10);
  const Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(original) + "'");
  }
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_integer(const Integer& value) { return value.get_str(); }

int sign(const Rational& value) { return sgn(value); }

Integer to_integer_exact(const Rational& value, const char* context) {
  if (value.get_den() != 1) {
    throw Error(ErrorKind::ParityViolation,
                std::string(context) + ": expected an integer, got " + format_rational(value));
  }
  return value.get_num();
}

}  // namespace polyspace
