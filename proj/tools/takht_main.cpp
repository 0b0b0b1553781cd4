#include "takht/approx.hpp"
#include "takht/isqrt.hpp"
#include "takht/json_io.hpp"
#include "takht/newton.hpp"
#include "takht/rational.hpp"
#include "takht/scale.hpp"
#include "takht/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

using namespace takht;

// Exit codes: 0 success/consistent, 1 usage, 2 precondition violation,
// 3 verification refuted.
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitRefuted = 3;

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string square_display(const Rational& sq) {
  std::string out = sq.str();
  if (!sq.is_integer() && sq >= Rational(Natural(1))) {
    out += " = " + sq.mixed_str();
  }
  return out;
}

void run_isqrt(const std::string& input, bool shortcut, const std::string& format) {
  Natural n = Natural::parse(input);
  IsqrtResult r = shortcut ? isqrt_zero_shortcut(n) : isqrt(n);
  if (format == "json") {
    emit(isqrt_to_json(n, r, false));
    return;
  }
  std::cout << "root=" << r.root.str() << " remainder=" << r.remainder.str();
  if (r.zero_shortcut_used) {
    std::cout << " [zero shortcut]";
  }
  std::cout << "\n";
}

void run_trace(const std::string& input, bool shortcut, bool paper_layout,
               const std::string& format) {
  Natural n = Natural::parse(input);
  IsqrtResult r = shortcut ? isqrt_zero_shortcut(n, true) : isqrt(n, true);
  if (format == "json") {
    emit(isqrt_to_json(n, r, true));
    return;
  }
  std::cout << "root=" << r.root.str() << " remainder=" << r.remainder.str();
  if (r.zero_shortcut_used) {
    std::cout << " [zero shortcut]";
  }
  std::cout << "\n\n";
  TraceRenderOptions opt;
  opt.paper_layout = paper_layout;
  std::cout << render_trace(n, r, opt);
}

void run_approx(const std::string& input, const std::string& rule_opt,
                const std::string& format) {
  Natural n = Natural::parse(input);
  if (n.is_zero()) {
    throw std::domain_error("approximation requires n >= 1");
  }
  Rule rule;
  if (rule_opt == "khwarizmi") {
    rule = Rule::khwarizmi;
  } else if (rule_opt == "conventional") {
    rule = Rule::conventional;
  } else {
    IsqrtResult r = isqrt(n);
    rule = select_rule(r.root, r.remainder);
  }
  Approximation a = approximate(n, rule);
  if (format == "json") {
    emit(approximation_to_json(n, a));
    return;
  }
  std::cout << "n=" << n.str() << " E=" << a.integer_part.str()
            << " R=" << a.remainder.str() << " rule=" << rule_name(a.rule) << "\n";
  std::cout << "value=" << a.value().mixed_str();
  if (a.fraction.is_zero()) {
    std::cout << " (exact)";
  }
  std::cout << "\n";
  std::cout << "square=" << square_display(a.square()) << "\n";
}

void run_compare(const std::string& input, const std::string& format) {
  Natural n = Natural::parse(input);
  RuleComparison c = compare_rules(n);
  if (format == "json") {
    emit(comparison_to_json(c));
    return;
  }
  std::cout << "n=" << c.n.str() << " E=" << c.integer_part.str()
            << " R=" << c.remainder.str()
            << (c.perfect_square ? " (perfect square)" : "") << "\n";
  auto side = [](const char* label, const Approximation& a, const Rational& dist) {
    std::cout << label << " value=" << a.value().mixed_str()
              << "  square=" << square_display(a.square())
              << "  distance=" << dist.str() << "\n";
  };
  side("khwarizmi:   ", c.khwarizmi, c.khwarizmi_distance);
  side("conventional:", c.conventional, c.conventional_distance);
  std::cout << "predicted=" << winner_name(c.predicted)
            << " measured=" << winner_name(c.measured)
            << " agree=" << (c.agree ? "yes" : "no") << "\n";
}

void run_scale(const std::string& input, const std::string& base, unsigned pairs,
               const std::string& format) {
  Natural n = Natural::parse(input);
  ScalingSpec spec{Natural::parse(base), pairs};
  ScaledRoot s = scaled_isqrt(n, spec);
  if (format == "json") {
    emit(scaled_root_to_json(n, s));
    return;
  }
  std::cout << "n=" << n.str() << " scaled_input=" << s.scaled_input.str()
            << " scaled_root=" << s.scaled_root.str()
            << " scaled_remainder=" << s.scaled_remainder.str()
            << " divisor=" << s.divisor.str() << "\n";
  std::cout << "value=" << s.value.str();
  if (!s.value.is_integer() && s.value >= Rational(Natural(1))) {
    std::cout << " = " << s.value.mixed_str();
  } else if (s.value.is_integer()) {
    std::cout << " = " << s.value.mixed_str() << " (exact)";
  }
  std::cout << "\n";
}

void run_sexagesimal(const std::string& input, unsigned places, unsigned precision,
                     const std::string& format) {
  Natural n = Natural::parse(input);
  if (precision == 0) {
    precision = places;  // the worked examples pair depth with p
  }
  FixedPointRoot fixed = decimal_expansion(n, precision);
  SexagesimalExpansion e = to_sexagesimal(fixed, places);
  if (format == "json") {
    emit(sexagesimal_to_json(fixed, e, n));
    return;
  }
  std::cout << e.str() << "\n";
  std::cout << "fixed_point=" << fixed.str() << " remainder=" << fixed.remainder.str()
            << "\n";
  std::cout << "chain=";
  for (std::size_t i = 0; i < e.chain.size(); ++i) {
    if (i > 0) std::cout << ",";
    std::cout << e.chain[i].str();
  }
  std::cout << "\n";
}

int run_verify(const std::string& input, const std::string& root_text,
               const std::string& remainder_text, const std::string& format) {
  Natural n = Natural::parse(input);
  Natural root = Natural::parse(root_text);
  Natural remainder = Natural::parse(remainder_text);
  VerificationReport report = check_root(n, root, remainder);
  if (format == "json") {
    emit(verification_to_json(n, root, remainder, report));
  } else {
    std::cout << "n=" << n.str() << " root=" << root.str()
              << " remainder=" << remainder.str() << "\n";
    std::cout << "a=" << report.residue_n << " b=" << report.residue_root_sq
              << " c=" << report.residue_remainder << "\n";
    if (report.passed) {
      std::cout << "correspond — consistent (mod 9); necessary check only\n";
    } else {
      std::cout << "ne correspond pas — refuted\n";
    }
  }
  return report.passed ? 0 : kExitRefuted;
}

void run_newton(const std::string& input, const std::string& start,
                unsigned max_steps, const std::string& tolerance, unsigned digits,
                const std::string& format) {
  Natural a = Natural::parse(input);
  Rational u0 = start.empty() ? Rational(a) : Rational::parse(start);
  Rational tol = Rational::parse(tolerance);
  NewtonRun run = newton_run(a, u0, max_steps, tol, digits);
  if (format == "json") {
    emit(newton_run_to_json(run));
    return;
  }
  std::cout << "a=" << run.target.str() << " start=" << run.start.str()
            << " tolerance=" << run.tolerance.str()
            << " max_steps=" << run.max_steps << "\n";
  for (const NewtonRecord& rec : run.records) {
    std::cout << "step " << rec.step << ": u=" << rec.iterate.str() << " ≈ "
              << rec.iterate.decimal_str(8) << " err=" << rec.error.str()
              << " digits=" << rec.correct_digits << "\n";
  }
  std::cout << "converged=" << (run.converged ? "yes" : "no")
            << " steps=" << run.steps_taken << "\n";
}

void run_sweep_criterion(unsigned long long lo, unsigned long long hi) {
  std::cout << criterion_csv_header() << "\n";
  CriterionSweep sweep =
      sweep_criterion(lo, hi, [](const RuleComparison& c) {
        std::cout << criterion_csv_row(c) << "\n";
      });
  std::cerr << "checked=" << sweep.checked << " squares=" << sweep.squares
            << " violations=" << sweep.violations.size() << "\n";
}

void run_sweep_newton(unsigned long long lo, unsigned long long hi, unsigned places,
                      unsigned steps) {
  std::cout << comparison_csv_header() << "\n";
  for (unsigned long long a = lo; a <= hi; ++a) {
    std::cout << comparison_csv_rows(compare_methods(Natural(a), places, steps));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digit-by-digit square roots on the decimal board, with exact "
               "fractional approximations, scaling, sexagesimal output, mod-9 "
               "checks and a Newton comparison harness"};
  app.require_subcommand(1);
  std::ios::sync_with_stdio(false);

  std::string input, root_text, remainder_text;
  std::string format = "text";
  std::string rule_opt = "auto";
  std::string base = "10";
  std::string start;
  std::string tolerance = "1/1000000";
  bool shortcut = false;
  bool paper_layout = false;
  unsigned pairs = 1;
  unsigned places = 3;
  unsigned precision = 0;
  unsigned max_steps = kDefaultNewtonCap;
  unsigned digits = kDefaultReferencePlaces;
  unsigned long long sweep_lo = 2, sweep_hi = 1000000;
  unsigned long long newton_lo = 2, newton_hi = 1023;
  unsigned sweep_places = 6, sweep_steps = 4;
  int rc = 0;

  auto* isqrt_cmd = app.add_subcommand("isqrt", "integer root and remainder");
  isqrt_cmd->add_option("n", input, "natural number (decimal)")->required();
  isqrt_cmd->add_flag("--shortcut", shortcut, "use the trailing-zero shortcut");
  add_format(isqrt_cmd, format);
  isqrt_cmd->callback([&] { run_isqrt(input, shortcut, format); });

  auto* trace_cmd = app.add_subcommand("trace", "board states of a full run");
  trace_cmd->add_option("n", input)->required();
  trace_cmd->add_flag("--shortcut", shortcut);
  trace_cmd->add_flag("--paper-layout", paper_layout,
                      "stack all rows in one table as the treatise prints them");
  add_format(trace_cmd, format);
  trace_cmd->callback([&] { run_trace(input, shortcut, paper_layout, format); });

  auto* approx_cmd = app.add_subcommand("approx", "fractional root approximation");
  approx_cmd->add_option("n", input)->required();
  approx_cmd->add_option("--rule", rule_opt, "attribution rule")
      ->check(CLI::IsMember({"auto", "khwarizmi", "conventional"}));
  add_format(approx_cmd, format);
  approx_cmd->callback([&] { run_approx(input, rule_opt, format); });

  auto* compare_cmd = app.add_subcommand("compare", "both rules with exact errors");
  compare_cmd->add_option("n", input)->required();
  add_format(compare_cmd, format);
  compare_cmd->callback([&] { run_compare(input, format); });

  auto* scale_cmd = app.add_subcommand("scale", "root via premultiplication by A^(2p)");
  scale_cmd->add_option("n", input)->required();
  scale_cmd->add_option("--base,-A", base, "scaling base A >= 2");
  scale_cmd->add_option("--pairs,-p", pairs, "number of squared factors p >= 1");
  add_format(scale_cmd, format);
  scale_cmd->callback([&] { run_scale(input, base, pairs, format); });

  auto* sexa_cmd = app.add_subcommand("sexagesimal", "base-60 fractional expansion");
  sexa_cmd->add_option("n", input)->required();
  sexa_cmd->add_option("--places", places, "number of base-60 places");
  sexa_cmd->add_option("--precision", precision,
                       "decimal places of the underlying expansion (default: --places)");
  add_format(sexa_cmd, format);
  sexa_cmd->callback([&] { run_sexagesimal(input, places, precision, format); });

  auto* verify_cmd = app.add_subcommand("verify", "mod-9 check of a claimed root");
  verify_cmd->add_option("n", input)->required();
  verify_cmd->add_option("root", root_text)->required();
  verify_cmd->add_option("remainder", remainder_text)->required();
  add_format(verify_cmd, format);
  verify_cmd->callback(
      [&] { rc = run_verify(input, root_text, remainder_text, format); });

  auto* newton_cmd = app.add_subcommand("newton", "exact rational Newton run");
  newton_cmd->add_option("a", input)->required();
  newton_cmd->add_option("--start", start, "u0 as p or p/q (default: a)");
  newton_cmd->add_option("--max-steps", max_steps);
  newton_cmd->add_option("--tolerance", tolerance, "stop when |u^2 - a| <= this");
  newton_cmd->add_option("--digits", digits, "reference decimal places");
  add_format(newton_cmd, format);
  newton_cmd->callback(
      [&] { run_newton(input, start, max_steps, tolerance, digits, format); });

  auto* sweep_cmd = app.add_subcommand("sweep", "bulk CSV sweeps");
  sweep_cmd->require_subcommand(1);
  auto* crit_cmd = sweep_cmd->add_subcommand(
      "criterion", "dominance criterion vs measured winner over a range");
  crit_cmd->add_option("--min", sweep_lo);
  crit_cmd->add_option("--max", sweep_hi);
  crit_cmd->callback([&] { run_sweep_criterion(sweep_lo, sweep_hi); });
  auto* swn_cmd = sweep_cmd->add_subcommand(
      "newton", "board method vs Newton precision over a range");
  swn_cmd->add_option("--min", newton_lo);
  swn_cmd->add_option("--max", newton_hi);
  swn_cmd->add_option("--places", sweep_places, "decimal places for the board side");
  swn_cmd->add_option("--steps", sweep_steps, "Newton steps from u0 = a");
  swn_cmd->callback(
      [&] { run_sweep_newton(newton_lo, newton_hi, sweep_places, sweep_steps); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return rc;
}
