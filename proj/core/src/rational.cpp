#include "hbtensor/rational.hpp"

#include "hbtensor/error.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace hbtensor {

const BigInt& factorial(unsigned n) {
  thread_local std::vector<BigInt> table{BigInt(1)};
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[n];
}

BigInt multinomial(unsigned r, const std::vector<unsigned>& parts) {
  BigInt denom = 1;
  for (unsigned p : parts) denom *= factorial(p);
  return factorial(r) / denom;
}

bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

unsigned to_natural(const Rational& q) {
  if (!is_integer(q) || q < 0 || q > std::numeric_limits<unsigned>::max()) {
    throw Error(ErrorKind::NotNatural, "value " + to_string(q) + " is not a natural number");
  }
  return boost::multiprecision::numerator(q).convert_to<unsigned>();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int reads a leading 0 as an octal prefix, so strip it first.
BigInt decimal_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return BigInt(std::string(s));
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::Parse, "malformed number '" + std::string(whole) + "'");
  BigInt v = decimal_digits(s);
  return negative ? BigInt(-v) : v;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    BigInt ev = parse_integer(exp_part, text);
    if (ev > 4096 || ev < -4096) throw Error(ErrorKind::Parse, "exponent out of range in '" + std::string(text) + "'");
    exponent = ev.convert_to<long>();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        int_part.empty() || frac_part.empty()) {
      throw Error(ErrorKind::Parse, "malformed number '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw Error(ErrorKind::Parse, "malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Rational value{decimal_digits(digits)};
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= scale;
  } else {
    value *= scale;
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return parse_decimal(text);
}

}  // namespace hbtensor
