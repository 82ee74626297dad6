#include "gcfiber/exact.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "gcfiber/error.hpp"

namespace gcfiber {
namespace {

using boost::multiprecision::cpp_int;

constexpr std::size_t kMaxExactFractionDigits = 30;

cpp_int pow10(unsigned e) {
  cpp_int p = 1;
  for (unsigned i = 0; i < e; ++i) p *= 10;
  return p;
}

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw Error(ErrorCode::Parse, "bad decimal '" + std::string(text) + "': " + why);
}

}  // namespace

Exact parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';

  cpp_int digits = 0;
  unsigned fraction_digits = 0;
  bool any_digit = false;
  bool in_fraction = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      any_digit = true;
      if (in_fraction) ++fraction_digits;
    } else if (ch == '.' && !in_fraction) {
      in_fraction = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail(text, "no digits");

  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc{} || ptr == first) fail(text, "bad exponent");
    if (exponent > 400 || exponent < -400) fail(text, "exponent out of range");
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (pos != text.size()) fail(text, "trailing characters");

  const long scale = exponent - static_cast<long>(fraction_digits);
  Exact value = scale >= 0 ? Exact(digits * pow10(static_cast<unsigned>(scale)))
                           : Exact(digits, pow10(static_cast<unsigned>(-scale)));
  return negative ? Exact(-value) : value;
}

Exact from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  return Exact(x);
}

double to_double(const Exact& x) { return x.convert_to<double>(); }

std::string to_decimal_string(const Exact& x) {
  cpp_int num = boost::multiprecision::numerator(x);
  cpp_int den = boost::multiprecision::denominator(x);
  cpp_int d = den;
  unsigned twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  const unsigned places = std::max(twos, fives);
  if (d == 1 && places <= kMaxExactFractionDigits) {
    const bool negative = num < 0;
    if (negative) num = -num;
    const cpp_int scaled = num * (pow10(places) / den);
    std::string s = scaled.str();
    if (places > 0) {
      if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
      s.insert(s.size() - places, ".");
      while (s.back() == '0') s.pop_back();
      if (s.back() == '.') s.pop_back();
    }
    return negative ? "-" + s : s;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, to_double(x));
  return std::string(buf, ptr);
}

}  // namespace gcfiber
