#include "takht/json_io.hpp"

namespace takht {

using nlohmann::json;

json trace_to_json(const std::vector<TakhtBoard>& trace) {
  json steps = json::array();
  for (const TakhtBoard& b : trace) {
    steps.push_back({{"step", b.step},
                     {"residual", b.remainder_row.value().str()},
                     {"work_row", b.work_row.str()},
                     {"offset", static_cast<int>(b.offset)},
                     {"chosen_digit", static_cast<int>(b.chosen_digit)}});
  }
  return steps;
}

json isqrt_to_json(const Natural& n, const IsqrtResult& result, bool include_trace) {
  json out{{"n", n.str()},
           {"root", result.root.str()},
           {"remainder", result.remainder.str()},
           {"zero_shortcut_used", result.zero_shortcut_used}};
  if (include_trace) {
    out["trace"] = trace_to_json(result.trace);
  }
  return out;
}

namespace {

json rule_side(const Approximation& a, const Rational& distance) {
  return {{"rule", rule_name(a.rule)},
          {"fraction", a.fraction.str()},
          {"value", a.value().str()},
          {"square", a.square().str()},
          {"distance", distance.str()}};
}

}  // namespace

json approximation_to_json(const Natural& n, const Approximation& a) {
  return {{"n", n.str()},
          {"E", a.integer_part.str()},
          {"R", a.remainder.str()},
          {"rule", rule_name(a.rule)},
          {"fraction", a.fraction.str()},
          {"value", a.value().str()},
          {"square", a.square().str()}};
}

json comparison_to_json(const RuleComparison& c) {
  return {{"n", c.n.str()},
          {"E", c.integer_part.str()},
          {"R", c.remainder.str()},
          {"perfect_square", c.perfect_square},
          {"khwarizmi", rule_side(c.khwarizmi, c.khwarizmi_distance)},
          {"conventional", rule_side(c.conventional, c.conventional_distance)},
          {"predicted_winner", winner_name(c.predicted)},
          {"measured_winner", winner_name(c.measured)},
          {"agree", c.agree}};
}

json scaled_root_to_json(const Natural& n, const ScaledRoot& s) {
  return {{"n", n.str()},
          {"scaled_input", s.scaled_input.str()},
          {"scaled_root", s.scaled_root.str()},
          {"scaled_remainder", s.scaled_remainder.str()},
          {"divisor", s.divisor.str()},
          {"value", s.value.str()}};
}

json sexagesimal_to_json(const FixedPointRoot& fixed,
                         const SexagesimalExpansion& expansion, const Natural& n) {
  json chain = json::array();
  for (const Natural& c : expansion.chain) {
    chain.push_back(c.str());
  }
  return {{"n", n.str()},
          {"integer", expansion.integer_part.str()},
          {"places", expansion.places},
          {"p", fixed.places},
          {"remainder", fixed.remainder.str()},
          {"fixed_point", fixed.str()},
          {"chain", chain},
          {"truncated", expansion.truncated}};
}

json verification_to_json(const Natural& n, const Natural& root,
                          const Natural& remainder, const VerificationReport& report) {
  return {{"n", n.str()},
          {"root", root.str()},
          {"remainder", remainder.str()},
          {"a", report.residue_n},
          {"b", report.residue_root_sq},
          {"c", report.residue_remainder},
          {"passed", report.passed},
          {"semantics", "necessary-only"}};
}

json screen_to_json(const Natural& n, const SquareScreen& screen) {
  return {{"n", n.str()},
          {"possible", screen.possible},
          {"unit_digit", static_cast<int>(screen.unit_digit)},
          {"mod9", screen.residue_mod9},
          {"violations", screen.violations},
          {"semantics", "necessary-only"}};
}

json newton_run_to_json(const NewtonRun& run) {
  json steps = json::array();
  for (const NewtonRecord& rec : run.records) {
    steps.push_back({{"step", rec.step},
                     {"iterate", rec.iterate.str()},
                     {"error", rec.error.str()},
                     {"correct_digits", rec.correct_digits}});
  }
  return {{"a", run.target.str()},
          {"start", run.start.str()},
          {"tolerance", run.tolerance.str()},
          {"max_steps", run.max_steps},
          {"reference_places", run.reference_places},
          {"converged", run.converged},
          {"steps_taken", run.steps_taken},
          {"iterates", steps}};
}

json method_comparison_to_json(const MethodComparison& c) {
  return {{"a", c.a.str()},
          {"metric", MethodComparison::metric},
          {"takht",
           {{"p", c.places},
            {"value", c.takht_value.str()},
            {"error", c.takht_error.str()}}},
          {"newton",
           {{"steps", c.newton_steps},
            {"value", c.newton_value.str()},
            {"error", c.newton_error.str()}}},
          {"winner", method_name(c.winner)}};
}

}  // namespace takht
