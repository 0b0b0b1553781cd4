#pragma once

#include "takht/natural.hpp"

#include <string>
#include <vector>

namespace takht {

// n mod 9 computed by iterated digit sums.
unsigned mod9(const Natural& n);

// Casting-out-nines check of a claimed root extraction. A failure
// refutes the claim; a pass only means the residues are consistent.
struct VerificationReport {
  unsigned residue_n = 0;          // a
  unsigned residue_root_sq = 0;    // b
  unsigned residue_remainder = 0;  // c
  bool passed = false;             // a == b + c (mod 9)
  static constexpr bool necessary_only = true;
};

VerificationReport check_root(const Natural& n, const Natural& root,
                              const Natural& remainder);

// Unit digits a root may have when its square ends in square_unit.
// Empty for 2, 3, 7, 8: no perfect square ends in those.
std::vector<Digit> unit_digit_candidates(Digit square_unit);

// Necessary-condition screen: a perfect square ends in 0, 1, 4, 5, 6 or
// 9 and is congruent to 0, 1, 4 or 7 mod 9. Passing does not make n a
// square; failing proves it is not.
struct SquareScreen {
  bool possible = true;  // false means definitely not a perfect square
  Digit unit_digit = 0;
  unsigned residue_mod9 = 0;
  std::vector<std::string> violations;
};

SquareScreen is_possible_square(const Natural& n);

}  // namespace takht
