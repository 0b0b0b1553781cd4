#pragma once

#include "takht/natural.hpp"
#include "takht/rational.hpp"

#include <functional>
#include <string>

namespace takht {

// Attribution rules for the remainder of a non-square N = E^2 + R:
// al-Khwarizmi assigns it to the doubled root, most calculators to the
// doubled root plus one.
enum class Rule { khwarizmi, conventional };

const char* rule_name(Rule rule);

struct Approximation {
  Natural integer_part;  // E
  Natural remainder;     // R
  Rational fraction;     // R/(2E) or R/(2E+1), reduced
  Rule rule = Rule::conventional;

  Rational value() const { return Rational(integer_part) + fraction; }
  Rational square() const { return rational_square(value()); }
};

// Requires n >= 1; perfect squares yield a zero fraction under both rules.
Approximation approximate(const Natural& n, Rule rule);

// Picks the rule the dominance criterion favors: R <= E-1 selects
// al-Khwarizmi's, R >= E the conventional one.
Rule select_rule(const Natural& integer_part, const Natural& remainder);

enum class Winner { khwarizmi, conventional, tie };

const char* winner_name(Winner w);

struct RuleComparison {
  Natural n;
  Natural integer_part;  // E
  Natural remainder;     // R
  Approximation khwarizmi;
  Approximation conventional;
  Rational khwarizmi_distance;     // |khwarizmi.square() - n|
  Rational conventional_distance;  // |conventional.square() - n|
  Winner measured = Winner::tie;
  Winner predicted = Winner::tie;
  bool agree = true;
  bool perfect_square = false;
};

// Both rules with their exact squares and distances to n, the measured
// winner under |approx^2 - n|, and the criterion's prediction. Requires
// n >= 1; perfect squares report a tie.
RuleComparison compare_rules(const Natural& n);

struct CriterionSweep {
  unsigned long long checked = 0;  // non-squares examined
  unsigned long long squares = 0;
  std::vector<Natural> violations;  // n where measured != predicted
};

// Exhaustive exact-arithmetic sweep of the dominance criterion over
// non-squares in [lo, hi]. The optional callback sees every comparison.
CriterionSweep sweep_criterion(unsigned long long lo, unsigned long long hi,
                               const std::function<void(const RuleComparison&)>& row = {});

std::string criterion_csv_header();
std::string criterion_csv_row(const RuleComparison& c);

}  // namespace takht
