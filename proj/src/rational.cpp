#include "cake/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cake {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Rat integer_from(std::string_view digits) {
  return Rat(boost::multiprecision::mpz_int(std::string(digits)));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("not a rational number: \"" + std::string(text) + "\"");
  };

  Rat value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Rat d = integer_from(den);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    value = integer_from(num) / d;
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return fail();
    Rat scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = integer_from(whole) + integer_from(frac) / scale;
  } else {
    if (!all_digits(body)) return fail();
    value = integer_from(body);
  }
  return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& r) { return r.str(); }

std::string to_decimal(const Rat& r, int digits) {
  using boost::multiprecision::mpz_int;
  if (digits < 0) digits = 0;
  mpz_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_int num = boost::multiprecision::numerator(r);
  mpz_int den = boost::multiprecision::denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_int scaled = (num * scale * 2 + den) / (den * 2);
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

}  // namespace cake
