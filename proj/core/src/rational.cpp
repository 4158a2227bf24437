#include "kminor/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "kminor/error.hpp"

namespace kminor {

Rational make_rational(long num, long den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

Integer power_of_ten(unsigned exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string shown(text);
  if (text.empty()) throw input_error("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num, den;
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den)) {
      throw input_error("malformed rational literal '" + shown + "'");
    }
    if (den == 0) throw input_error("zero denominator in '" + shown + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  // Decimal with optional fraction and exponent.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    Integer exp_value;
    if (!parse_integer(text.substr(e + 1), exp_value) || !exp_value.fits_slong_p()) {
      throw input_error("malformed exponent in '" + shown + "'");
    }
    exponent = exp_value.get_si();
    mantissa = text.substr(0, e);
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw input_error("malformed rational literal '" + shown + "'");
    }
  }
  if (digits.empty()) throw input_error("malformed rational literal '" + shown + "'");
  Integer num(digits, 10);
  if (negative) num = -num;
  const long scale = exponent - fraction_digits;
  if (scale < -4000 || scale > 4000) throw input_error("exponent out of range in '" + shown + "'");
  Rational r;
  if (scale >= 0) {
    r = Rational(num * power_of_ten(static_cast<unsigned>(scale)));
  } else {
    r = Rational(num, power_of_ten(static_cast<unsigned>(-scale)));
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  const Integer scale = power_of_ten(static_cast<unsigned>(digits));
  Rational scaled = abs(value) * scale;
  Integer rounded = floor(scaled + Rational(1, 2));
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (value < 0 && rounded != 0) body.insert(0, "-");
  return body;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw numeric_error("non-finite value cannot be made exact");
  return Rational(value);
}

double to_double(const Rational& value) { return value.get_d(); }

Integer floor(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

Integer ceil(const Rational& value) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent > 0) factor *= factor;
  }
  return result;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational sum(const std::vector<Rational>& values) {
  Rational total(0);
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace kminor
