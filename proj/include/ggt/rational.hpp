#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ggt/error.hpp"

namespace ggt {

// Exact rational arithmetic over int64, always normalised (den > 0,
// gcd(|num|, den) = 1). All verdict comparisons in the library go through
// this type; floating point appears only in reports that print logarithms.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT implicit

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) fail("DivisionByZero", "rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail("DivisionByZero", "rational division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  // Accepts "p/q", plain integers, and exact decimals ("0.005" -> 1/200).
  static Rational parse(const std::string& text);

  // "p/q" for proper fractions, bare "p" for integers.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  static Rational min(const Rational& a, const Rational& b) {
    return a < b ? a : b;
  }
  static Rational max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
  }

 private:
  using i128 = __int128;

  static Rational from128(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      fail("Overflow", "rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
  if (text.empty()) fail("BadRational", "empty rational literal");
  auto parse_int = [](const std::string& s) -> std::int64_t {
    if (s.empty() || (!std::isdigit(static_cast<unsigned char>(s[0])) &&
                      s[0] != '-' && s[0] != '+'))
      fail("BadRational", "bad integer in rational literal: '" + s + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      fail("BadRational", "bad integer in rational literal: '" + s + "'");
    }
    if (pos != s.size())
      fail("BadRational", "trailing characters in rational literal: '" + s + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t p = parse_int(text.substr(0, slash));
    std::int64_t q = parse_int(text.substr(slash + 1));
    if (q == 0) fail("BadRational", "zero denominator: '" + text + "'");
    return Rational(p, q);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    bool neg = head[0] == '-';
    std::int64_t ip = parse_int(head);
    std::int64_t den = 1;
    std::int64_t frac = 0;
    for (char c : tail) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail("BadRational", "bad decimal literal: '" + text + "'");
      if (den > INT64_MAX / 10) fail("Overflow", "decimal literal too long");
      den *= 10;
      frac = frac * 10 + (c - '0');
    }
    Rational r = Rational(ip) + (neg ? -Rational(frac, den) : Rational(frac, den));
    return r;
  }
  return Rational(parse_int(text));
}

}  // namespace ggt
