#pragma once

#include "takht/natural.hpp"

#include <random>
#include <string>
#include <vector>

// Independent reference computations for the test suites. These stay on
// plain Natural arithmetic and never touch the board engine.
namespace takht::testing {

// Floor square root by binary search on squares.
inline Natural floor_sqrt_oracle(const Natural& n) {
  if (n < Natural(2)) {
    return n;
  }
  Natural lo(1), hi(2);
  while (hi * hi <= n) {
    hi = hi * Natural(2);
  }
  // lo^2 <= n < hi^2
  while (hi - lo > Natural(1)) {
    Natural mid = (lo + hi) / Natural(2);
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Uniform digit-string natural with 1..max_digits digits, no leading zero.
inline Natural random_natural(std::mt19937_64& rng, unsigned max_digits) {
  std::uniform_int_distribution<unsigned> len_dist(1, max_digits);
  std::uniform_int_distribution<int> first_digit(1, 9);
  std::uniform_int_distribution<int> any_digit(0, 9);
  unsigned len = len_dist(rng);
  std::string s;
  s.reserve(len);
  s.push_back(static_cast<char>('0' + first_digit(rng)));
  for (unsigned i = 1; i < len; ++i) {
    s.push_back(static_cast<char>('0' + any_digit(rng)));
  }
  return Natural::parse(s);
}

// i-th base-60 place of frac/10^p is floor(frac * 60^i / 10^p) mod 60.
inline std::vector<unsigned> sexagesimal_oracle(const Natural& frac, unsigned p,
                                                unsigned depth) {
  std::vector<unsigned> out;
  const Natural scale = pow(Natural(10), p);
  const Natural sixty(60);
  for (unsigned i = 1; i <= depth; ++i) {
    Natural place = (frac * pow(sixty, i)) / scale % sixty;
    out.push_back(static_cast<unsigned>(place.to_ull()));
  }
  return out;
}

}  // namespace takht::testing
