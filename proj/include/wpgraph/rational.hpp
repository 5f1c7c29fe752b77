#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "wpgraph/errors.hpp"

namespace wpgraph {

// Exact rational with a nonnegative reduced denominator. All predicates in
// this library compare rationals by cross-multiplication; no floating point
// is involved anywhere near a verdict.
struct Rational {
  long long num = 0;
  long long den = 1;  // den >= 1, gcd(|num|, den) == 1

  constexpr Rational() = default;

  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw Error(errc::bad_argument, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool positive() const { return num > 0; }

  // "2" for integers, "3/2" otherwise.
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "2", "3/2"; rejects anything else.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
};

// Smallest integer >= num/den. Used for the unimodality bound with
// non-integer lambda.
long long ceil_div(long long num, long long den);

}  // namespace wpgraph
