#include "takht/rational.hpp"

#include <stdexcept>

namespace takht {

Rational::Rational(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational denominator must be positive");
  }
  Natural g = gcd(num_, den_);
  if (g > Natural(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (num_.is_zero()) {
    den_ = Natural(1);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(Natural::parse(text));
  }
  Natural num = Natural::parse(text.substr(0, slash));
  Natural den = Natural::parse(text.substr(slash + 1));
  return Rational(std::move(num), std::move(den));
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  Natural lhs = num_ * o.den_;
  Natural rhs = o.num_ * den_;
  if (lhs < rhs) {
    throw std::domain_error("rational subtraction underflow");
  }
  *this = Rational(lhs - rhs, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("rational division by zero");
  }
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

std::string Rational::mixed_str() const {
  if (is_integer()) {
    return num_.str();
  }
  auto [whole, rest] = Natural::divmod(num_, den_);
  if (whole.is_zero()) {
    return rest.str() + "/" + den_.str();
  }
  return whole.str() + " + " + rest.str() + "/" + den_.str();
}

std::string Rational::decimal_str(unsigned places) const {
  auto [whole, rest] = Natural::divmod(num_, den_);
  std::string out = whole.str();
  if (places == 0) {
    return out;
  }
  out.push_back('.');
  Natural r = rest;
  const Natural ten(10);
  for (unsigned i = 0; i < places; ++i) {
    r *= ten;
    auto [digit, next] = Natural::divmod(r, den_);
    out += digit.str();
    r = next;
  }
  return out;
}

Rational rational_square(const Rational& q) { return q * q; }

Rational abs_diff(const Rational& a, const Rational& b) {
  return a >= b ? a - b : b - a;
}

DistanceOrder rational_compare_distance(const Rational& q1, const Rational& q2,
                                        const Natural& target) {
  Rational d1 = abs_diff(q1, Rational(target));
  Rational d2 = abs_diff(q2, Rational(target));
  auto c = d1 <=> d2;
  if (c < 0) return DistanceOrder::first_closer;
  if (c > 0) return DistanceOrder::second_closer;
  return DistanceOrder::tie;
}

}  // namespace takht
