#include "belfl/rational.hpp"

#include <cctype>

#include "belfl/error.hpp"

namespace belfl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(original) + "'", 0);
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(original) + "'", 0);
    result = Rational(parse_integer(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(original) + "'", 0);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = whole.empty() ? mpz_class(0) : parse_integer(whole);
    num = num * scale + parse_integer(frac);
    result = Rational(num, scale);
  } else {
    if (!all_digits(text)) {
      throw ParseError("malformed number '" + std::string(original) + "'", 0);
    }
    result = Rational(parse_integer(text));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace belfl
