#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace takht {

using Digit = std::uint8_t;

// Arbitrary-precision natural number. Values are nonnegative by
// construction; subtraction is partial and throws on underflow.
class Natural {
public:
  Natural() = default;
  Natural(unsigned long long v) : v_(v) {}
  Natural(long long v);
  Natural(int v) : Natural(static_cast<long long>(v)) {}

  // Strict decimal parse: ASCII digits only, no sign, no leading zeros
  // (except the canonical "0").
  static Natural parse(std::string_view text);

  bool is_zero() const { return v_.is_zero(); }
  bool is_even() const;

  Natural& operator+=(const Natural& o);
  Natural& operator-=(const Natural& o);  // throws std::domain_error on underflow
  Natural& operator*=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(const Natural& a, const Natural& b);
  friend Natural operator%(const Natural& a, const Natural& b);

  // Euclidean (quotient, remainder); divisor must be nonzero.
  static std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b);

  std::strong_ordering operator<=>(const Natural& o) const;
  bool operator==(const Natural& o) const { return v_ == o.v_; }

  std::string str() const { return v_.str(); }
  unsigned long long to_ull() const;  // throws std::overflow_error if too wide

  friend Natural gcd(const Natural& a, const Natural& b);
  friend Natural pow(const Natural& base, unsigned exponent);

private:
  explicit Natural(boost::multiprecision::cpp_int v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_int v_;
};

Natural gcd(const Natural& a, const Natural& b);
Natural pow(const Natural& base, unsigned exponent);

// Base-10 digit view, most significant digit first. Canonical strings
// (as produced by to_digits) carry no leading zero except for the single
// digit 0; board rows and pad_to_even output may be explicitly left-padded.
struct DigitString {
  std::vector<Digit> digits;

  std::size_t size() const { return digits.size(); }
  Natural value() const;
  std::string str() const;

  bool operator==(const DigitString&) const = default;
};

// Canonical decimal decomposition of n.
DigitString to_digits(const Natural& n);

// Prepends one zero when the digit count is odd; value is unchanged.
DigitString pad_to_even(DigitString d);

// Re-evaluates digits under sum of d_i * 10^i. Accepts left-padded input.
Natural from_digits(const DigitString& d);

}  // namespace takht
