#include "takht/verify.hpp"

namespace takht {

namespace {

unsigned long long digit_sum(const Natural& n) {
  unsigned long long sum = 0;
  for (Digit d : to_digits(n).digits) {
    sum += d;
  }
  return sum;
}

}  // namespace

unsigned mod9(const Natural& n) {
  unsigned long long sum = digit_sum(n);
  while (sum > 9) {
    sum = digit_sum(Natural(sum));
  }
  return sum == 9 ? 0 : static_cast<unsigned>(sum);
}

VerificationReport check_root(const Natural& n, const Natural& root,
                              const Natural& remainder) {
  VerificationReport report;
  report.residue_n = mod9(n);
  unsigned root_residue = mod9(root);
  report.residue_root_sq = (root_residue * root_residue) % 9;
  report.residue_remainder = mod9(remainder);
  report.passed =
      (report.residue_root_sq + report.residue_remainder) % 9 == report.residue_n;
  return report;
}

std::vector<Digit> unit_digit_candidates(Digit square_unit) {
  switch (square_unit) {
    case 0: return {0};
    case 1: return {1, 9};
    case 4: return {2, 8};
    case 5: return {5};
    case 6: return {4, 6};
    case 9: return {3, 7};
    default: return {};  // 2, 3, 7, 8 never end a perfect square
  }
}

SquareScreen is_possible_square(const Natural& n) {
  SquareScreen screen;
  screen.unit_digit = to_digits(n).digits.back();
  screen.residue_mod9 = mod9(n);
  if (unit_digit_candidates(screen.unit_digit).empty()) {
    screen.possible = false;
    screen.violations.push_back("unit digit " + std::to_string(screen.unit_digit) +
                                " is not in {0,1,4,5,6,9}");
  }
  unsigned r = screen.residue_mod9;
  if (r != 0 && r != 1 && r != 4 && r != 7) {
    screen.possible = false;
    screen.violations.push_back("residue " + std::to_string(r) +
                                " mod 9 is not in {0,1,4,7}");
  }
  return screen;
}

}  // namespace takht
