#include "takht/approx.hpp"

#include "takht/isqrt.hpp"

#include <stdexcept>

namespace takht {

const char* rule_name(Rule rule) {
  return rule == Rule::khwarizmi ? "khwarizmi" : "conventional";
}

const char* winner_name(Winner w) {
  switch (w) {
    case Winner::khwarizmi: return "khwarizmi";
    case Winner::conventional: return "conventional";
    default: return "tie";
  }
}

namespace {

Approximation from_parts(Natural e, Natural r, Rule rule) {
  Natural denom = Natural(2) * e;
  if (rule == Rule::conventional) {
    denom += Natural(1);
  }
  Approximation a;
  a.fraction = Rational(r, denom);
  a.integer_part = std::move(e);
  a.remainder = std::move(r);
  a.rule = rule;
  return a;
}

}  // namespace

Approximation approximate(const Natural& n, Rule rule) {
  if (n.is_zero()) {
    throw std::domain_error("approximation requires n >= 1");
  }
  IsqrtResult r = isqrt(n);
  return from_parts(std::move(r.root), std::move(r.remainder), rule);
}

Rule select_rule(const Natural& integer_part, const Natural& remainder) {
  // R <= E-1, compared as R+1 <= E to stay within naturals.
  return remainder + Natural(1) <= integer_part ? Rule::khwarizmi : Rule::conventional;
}

namespace {

RuleComparison compare_from_parts(Natural n, Natural e, Natural r) {
  RuleComparison c;
  c.perfect_square = r.is_zero();
  c.khwarizmi = from_parts(e, r, Rule::khwarizmi);
  c.conventional = from_parts(e, r, Rule::conventional);
  Rational target{n};
  c.khwarizmi_distance = abs_diff(c.khwarizmi.square(), target);
  c.conventional_distance = abs_diff(c.conventional.square(), target);
  if (c.perfect_square) {
    c.measured = Winner::tie;
    c.predicted = Winner::tie;
  } else {
    auto order = c.khwarizmi_distance <=> c.conventional_distance;
    c.measured = order < 0   ? Winner::khwarizmi
                 : order > 0 ? Winner::conventional
                             : Winner::tie;
    c.predicted = select_rule(e, r) == Rule::khwarizmi ? Winner::khwarizmi
                                                       : Winner::conventional;
  }
  c.agree = (c.measured == c.predicted);
  c.n = std::move(n);
  c.integer_part = std::move(e);
  c.remainder = std::move(r);
  return c;
}

}  // namespace

RuleComparison compare_rules(const Natural& n) {
  if (n.is_zero()) {
    throw std::domain_error("rule comparison requires n >= 1");
  }
  IsqrtResult r = isqrt(n);
  return compare_from_parts(n, std::move(r.root), std::move(r.remainder));
}

CriterionSweep sweep_criterion(unsigned long long lo, unsigned long long hi,
                               const std::function<void(const RuleComparison&)>& row) {
  CriterionSweep sweep;
  if (lo == 0) lo = 1;
  for (unsigned long long v = lo; v <= hi; ++v) {
    Natural n(v);
    IsqrtResult r = isqrt(n);
    if (r.remainder.is_zero()) {
      ++sweep.squares;
      continue;
    }
    RuleComparison c = compare_from_parts(std::move(n), std::move(r.root),
                                          std::move(r.remainder));
    ++sweep.checked;
    if (!c.agree) {
      sweep.violations.push_back(c.n);
    }
    if (row) {
      row(c);
    }
  }
  return sweep;
}

std::string criterion_csv_header() { return "n,E,R,predicted,measured,agree"; }

std::string criterion_csv_row(const RuleComparison& c) {
  return c.n.str() + "," + c.integer_part.str() + "," + c.remainder.str() + "," +
         winner_name(c.predicted) + "," + winner_name(c.measured) + "," +
         (c.agree ? "yes" : "no");
}

}  // namespace takht
