#include "takht/natural.hpp"

#include <stdexcept>

namespace takht {

namespace mp = boost::multiprecision;

Natural::Natural(long long v) {
  if (v < 0) {
    throw std::domain_error("natural number cannot be negative");
  }
  v_ = v;
}

Natural Natural::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty decimal string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid decimal digit in \"" + std::string(text) + "\"");
    }
  }
  if (text.size() > 1 && text.front() == '0') {
    throw std::invalid_argument("leading zeros are not canonical: \"" + std::string(text) + "\"");
  }
  // cpp_int would read a leading 0 as an octal prefix; canonical input has none.
  return Natural(mp::cpp_int(std::string(text)));
}

bool Natural::is_even() const { return !mp::bit_test(v_, 0); }

Natural& Natural::operator+=(const Natural& o) {
  v_ += o.v_;
  return *this;
}

Natural& Natural::operator-=(const Natural& o) {
  if (v_ < o.v_) {
    throw std::domain_error("natural subtraction underflow");
  }
  v_ -= o.v_;
  return *this;
}

Natural& Natural::operator*=(const Natural& o) {
  v_ *= o.v_;
  return *this;
}

Natural operator/(const Natural& a, const Natural& b) {
  if (b.is_zero()) {
    throw std::domain_error("division by zero");
  }
  return Natural(boost::multiprecision::cpp_int(a.v_ / b.v_));
}

Natural operator%(const Natural& a, const Natural& b) {
  if (b.is_zero()) {
    throw std::domain_error("division by zero");
  }
  return Natural(boost::multiprecision::cpp_int(a.v_ % b.v_));
}

std::pair<Natural, Natural> Natural::divmod(const Natural& a, const Natural& b) {
  if (b.is_zero()) {
    throw std::domain_error("division by zero");
  }
  mp::cpp_int q, r;
  mp::divide_qr(a.v_, b.v_, q, r);
  return {Natural(std::move(q)), Natural(std::move(r))};
}

std::strong_ordering Natural::operator<=>(const Natural& o) const {
  int c = v_.compare(o.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

unsigned long long Natural::to_ull() const {
  if (v_ > std::numeric_limits<unsigned long long>::max()) {
    throw std::overflow_error("natural does not fit in unsigned long long");
  }
  return v_.convert_to<unsigned long long>();
}

Natural gcd(const Natural& a, const Natural& b) {
  return Natural(mp::gcd(a.v_, b.v_));
}

Natural pow(const Natural& base, unsigned exponent) {
  return Natural(mp::pow(base.v_, exponent));
}

Natural DigitString::value() const { return from_digits(*this); }

std::string DigitString::str() const {
  std::string out;
  out.reserve(digits.size());
  for (Digit d : digits) {
    out.push_back(static_cast<char>('0' + d));
  }
  return out;
}

DigitString to_digits(const Natural& n) {
  std::string s = n.str();
  DigitString out;
  out.digits.reserve(s.size());
  for (char c : s) {
    out.digits.push_back(static_cast<Digit>(c - '0'));
  }
  return out;
}

DigitString pad_to_even(DigitString d) {
  if (d.digits.size() % 2 != 0) {
    d.digits.insert(d.digits.begin(), 0);
  }
  return d;
}

Natural from_digits(const DigitString& d) {
  if (d.digits.empty()) {
    throw std::invalid_argument("empty digit string");
  }
  std::size_t first = 0;
  while (first + 1 < d.digits.size() && d.digits[first] == 0) {
    ++first;
  }
  std::string s;
  s.reserve(d.digits.size() - first);
  for (std::size_t i = first; i < d.digits.size(); ++i) {
    if (d.digits[i] > 9) {
      throw std::invalid_argument("digit out of range 0..9");
    }
    s.push_back(static_cast<char>('0' + d.digits[i]));
  }
  return Natural::parse(s);
}

}  // namespace takht
