#pragma once

#include "takht/natural.hpp"
#include "takht/rational.hpp"

#include <string>
#include <vector>

namespace takht {

// Pre-multiplication by A an even number of times: sqrt(A^(2p) * N) =
// A^p * sqrt(N), so the scaled integer root divided by A^p approximates
// the root from below.
struct ScalingSpec {
  Natural base;            // A >= 2
  unsigned exponent_pairs = 1;  // p >= 1
};

struct ScaledRoot {
  Natural scaled_input;      // A^(2p) * n
  Natural scaled_root;       // floor(sqrt(scaled_input))
  Natural scaled_remainder;  // scaled_input - scaled_root^2
  Natural divisor;           // A^p
  Rational value;            // scaled_root / divisor, reduced
};

ScaledRoot scaled_isqrt(const Natural& n, const ScalingSpec& spec);

// The A = 10 specialization: the scaled root read as a fixed-point
// number with p decimal places, truncated, never rounded.
struct FixedPointRoot {
  Natural scaled_root;  // floor(sqrt(10^(2p) * n))
  Natural remainder;
  unsigned places = 0;  // p

  Natural integer_part() const;
  Natural fraction_value() const;  // scaled_root mod 10^p
  Rational value() const;
  std::string str() const;  // "2.236"
};

FixedPointRoot decimal_expansion(const Natural& n, unsigned places);

// Base-60 expansion of the fractional part: the residue is repeatedly
// multiplied by 60 and the quotient by 10^p peeled off as the next
// place, so every place is below 60 by construction.
struct SexagesimalExpansion {
  Natural integer_part;
  std::vector<unsigned> places;  // minutes, seconds, tierces, ...
  std::vector<Natural> chain;    // the 60 * residue products, one per place
  bool truncated = false;        // residue nonzero after the last place

  std::string str() const;  // "2;14,9,36"
};

SexagesimalExpansion to_sexagesimal(const FixedPointRoot& fixed, unsigned depth);

}  // namespace takht
