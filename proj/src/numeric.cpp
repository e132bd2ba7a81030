#include "hyperlin/numeric.hpp"

#include "hyperlin/errors.hpp"

#include <cctype>

namespace hyperlin {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!is_integer_literal(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return BigInt(t);
}

}  // namespace

bool looks_like_fraction(std::string_view text) {
  return text.find('/') != std::string_view::npos;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw DomainError("expected an exact rational 'num/den', got '" + std::string(text) + "'");
    }
    return Rational(parse_int(text));
  }
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational parse_decimal_exact(std::string_view text) {
  if (text.empty()) throw DomainError("empty decimal");
  if (looks_like_fraction(text)) {
    throw DomainError("expected a decimal number, got the fraction '" + std::string(text) + "'");
  }
  std::string_view mant = text;
  long long exp10 = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    const auto ex = text.substr(e + 1);
    if (!is_integer_literal(ex)) throw DomainError("bad exponent in '" + std::string(text) + "'");
    exp10 = std::stoll(std::string(ex));
  }
  bool negative = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_point) throw DomainError("bad decimal '" + std::string(text) + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exp10;
    } else {
      throw DomainError("bad decimal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw DomainError("bad decimal '" + std::string(text) + "'");
  // A leading zero would make the integer parser read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value{BigInt(digits)};
  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
  value = exp10 < 0 ? value / Rational(scale) : value * Rational(scale);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& z) { return z.str(); }

HighFloat to_high(const Rational& q) {
  return HighFloat(boost::multiprecision::numerator(q)) / HighFloat(boost::multiprecision::denominator(q));
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt falling_factorial(long long n, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= BigInt(n - i);
  return out;
}

}  // namespace hyperlin
