#pragma once

#include "takht/natural.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace takht {

// Exact nonnegative fraction, always held in lowest terms with a
// positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(Natural n) : num_(std::move(n)), den_(1) {}
  Rational(unsigned long long n) : num_(n), den_(1) {}
  Rational(Natural num, Natural den);  // reduces; throws on zero denominator

  // "p" or "p/q", both parts canonical decimals.
  static Rational parse(std::string_view text);

  const Natural& numerator() const { return num_; }
  const Natural& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Natural(1); }

  Natural floor() const { return num_ / den_; }
  Rational fractional_part() const { return Rational(num_ % den_, den_); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);  // throws on underflow
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

  // "p/q" (denominator always shown).
  std::string str() const;
  // "E + R/D" for values >= 1, "R/D" for proper fractions, "E" for integers.
  std::string mixed_str() const;
  // Truncated decimal rendering with the given number of fraction places.
  std::string decimal_str(unsigned places) const;

private:
  Natural num_;
  Natural den_;
};

Rational rational_square(const Rational& q);

// |a - b|, exact.
Rational abs_diff(const Rational& a, const Rational& b);

enum class DistanceOrder { first_closer, second_closer, tie };

// Compares |q1 - target| against |q2 - target| exactly.
DistanceOrder rational_compare_distance(const Rational& q1, const Rational& q2,
                                        const Natural& target);

}  // namespace takht
