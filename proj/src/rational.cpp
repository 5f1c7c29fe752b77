#include "wpgraph/rational.hpp"

#include <cctype>
#include <charconv>

namespace wpgraph {

namespace {

long long parse_int(std::string_view text) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(errc::bad_argument, "bad integer '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

long long ceil_div(long long num, long long den) {
  if (den == 0) throw Error(errc::bad_argument, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace wpgraph
