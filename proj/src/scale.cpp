#include "takht/scale.hpp"

#include "takht/isqrt.hpp"

#include <stdexcept>

namespace takht {

ScaledRoot scaled_isqrt(const Natural& n, const ScalingSpec& spec) {
  if (spec.base < Natural(2)) {
    throw std::domain_error("scaling base must be at least 2");
  }
  if (spec.exponent_pairs < 1) {
    throw std::domain_error("scaling exponent must pair at least once");
  }
  ScaledRoot out;
  out.divisor = pow(spec.base, spec.exponent_pairs);
  out.scaled_input = out.divisor * out.divisor * n;
  IsqrtResult r = isqrt(out.scaled_input);
  out.scaled_root = std::move(r.root);
  out.scaled_remainder = std::move(r.remainder);
  out.value = Rational(out.scaled_root, out.divisor);
  return out;
}

Natural FixedPointRoot::integer_part() const {
  return scaled_root / pow(Natural(10), places);
}

Natural FixedPointRoot::fraction_value() const {
  return scaled_root % pow(Natural(10), places);
}

Rational FixedPointRoot::value() const {
  return Rational(scaled_root, pow(Natural(10), places));
}

std::string FixedPointRoot::str() const {
  std::string digits = scaled_root.str();
  if (digits.size() <= places) {
    digits.insert(digits.begin(), places + 1 - digits.size(), '0');
  }
  digits.insert(digits.end() - places, '.');
  return digits;
}

FixedPointRoot decimal_expansion(const Natural& n, unsigned places) {
  if (places < 1) {
    throw std::domain_error("decimal expansion needs at least one place");
  }
  FixedPointRoot out;
  out.places = places;
  IsqrtResult r = isqrt(pow(Natural(10), 2 * places) * n);
  out.scaled_root = std::move(r.root);
  out.remainder = std::move(r.remainder);
  return out;
}

SexagesimalExpansion to_sexagesimal(const FixedPointRoot& fixed, unsigned depth) {
  if (depth < 1) {
    throw std::domain_error("sexagesimal expansion needs at least one place");
  }
  SexagesimalExpansion out;
  out.integer_part = fixed.integer_part();
  out.places.reserve(depth);
  out.chain.reserve(depth);

  const Natural scale = pow(Natural(10), fixed.places);
  const Natural sixty(60);
  Natural residue = fixed.fraction_value();
  for (unsigned i = 0; i < depth; ++i) {
    Natural product = residue * sixty;
    auto [place, rest] = Natural::divmod(product, scale);
    out.chain.push_back(std::move(product));
    out.places.push_back(static_cast<unsigned>(place.to_ull()));
    residue = std::move(rest);
  }
  out.truncated = !residue.is_zero();
  return out;
}

std::string SexagesimalExpansion::str() const {
  std::string out = integer_part.str();
  out.push_back(';');
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(places[i]);
  }
  return out;
}

}  // namespace takht
