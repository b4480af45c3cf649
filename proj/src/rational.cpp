#include "hilbcone/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace hilbcone {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& q) { return q.str(); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(i)));
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text, text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  // Division canonicalizes; the two-string constructor does not.
  return Rational(num) / Rational(den);
}

bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

Integer numerator_of(const Rational& q) { return mp::numerator(q); }

Integer denominator_of(const Rational& q) { return mp::denominator(q); }

long long to_int64(const Rational& q) {
  if (!is_integer(q)) {
    throw std::invalid_argument("expected an integer, got " + to_string(q));
  }
  const Integer n = mp::numerator(q);
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
    throw std::out_of_range("integer out of range: " + n.str());
  }
  return n.convert_to<long long>();
}

std::string to_decimal(const Rational& q, int places) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const Integer num = mp::numerator(q) * scale;
  const Integer den = mp::denominator(q);
  Integer mag = mp::abs(num);
  Integer rounded = (2 * mag + den) / (2 * den);
  std::string digits = rounded.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  const bool negative = num < 0 && rounded != 0;
  return negative ? "-" + digits : digits;
}

int sign(const Rational& q) { return q.sign(); }

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace hilbcone
