#include "takht/newton.hpp"

#include "takht/scale.hpp"

#include <stdexcept>

namespace takht {

NewtonState newton_step(const NewtonState& state) {
  if (state.iterate.is_zero()) {
    throw std::domain_error("newton step needs a nonzero iterate");
  }
  NewtonState next;
  next.target = state.target;
  next.step = state.step + 1;
  next.iterate = (rational_square(state.iterate) + Rational(state.target)) /
                 (Rational(Natural(2)) * state.iterate);
  return next;
}

namespace {

// Leading decimal digits (aligned at the decimal point) that value
// shares with the reference root scaled by 10^places.
unsigned matching_digits(const Rational& value, const Natural& reference_scaled,
                         unsigned places) {
  Natural scaled = (value.numerator() * pow(Natural(10), places)) / value.denominator();
  std::string lhs = scaled.str();
  std::string rhs = reference_scaled.str();
  if (lhs.size() != rhs.size()) {
    return 0;  // integer parts differ in width
  }
  unsigned count = 0;
  for (std::size_t i = 0; i < lhs.size() && lhs[i] == rhs[i]; ++i) {
    ++count;
  }
  return count;
}

Rational square_error(const Rational& value, const Natural& a) {
  return abs_diff(rational_square(value), Rational(a));
}

}  // namespace

NewtonRun newton_run(const Natural& a, const Rational& u0, unsigned max_steps,
                     const Rational& tolerance, unsigned reference_places) {
  if (a.is_zero()) {
    throw std::domain_error("newton run requires a >= 1");
  }
  if (u0.is_zero()) {
    throw std::domain_error("newton run requires a positive start");
  }
  NewtonRun run;
  run.target = a;
  run.start = u0;
  run.tolerance = tolerance;
  run.max_steps = max_steps;
  run.reference_places = reference_places;

  const Natural reference = decimal_expansion(a, reference_places).scaled_root;

  NewtonState state{u0, 0, a};
  while (true) {
    NewtonRecord rec;
    rec.step = state.step;
    rec.iterate = state.iterate;
    rec.error = square_error(state.iterate, a);
    rec.correct_digits = matching_digits(state.iterate, reference, reference_places);
    bool within = rec.error <= tolerance;
    run.records.push_back(std::move(rec));
    if (within) {
      run.converged = true;
      break;
    }
    if (state.step >= max_steps) {
      break;
    }
    state = newton_step(state);
  }
  run.steps_taken = run.records.back().step;
  return run;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::takht: return "takht";
    case Method::newton: return "newton";
    default: return "tie";
  }
}

MethodComparison compare_methods(const Natural& a, unsigned places,
                                 unsigned newton_steps,
                                 const std::optional<Rational>& u0) {
  if (a.is_zero()) {
    throw std::domain_error("method comparison requires a >= 1");
  }
  MethodComparison c;
  c.a = a;
  c.places = places;
  c.newton_steps = newton_steps;

  c.takht_value = decimal_expansion(a, places).value();
  c.takht_error = square_error(c.takht_value, a);

  NewtonState state{u0.value_or(Rational(a)), 0, a};
  for (unsigned i = 0; i < newton_steps; ++i) {
    state = newton_step(state);
  }
  c.newton_value = state.iterate;
  c.newton_error = square_error(c.newton_value, a);

  auto order = c.takht_error <=> c.newton_error;
  c.winner = order < 0 ? Method::takht : order > 0 ? Method::newton : Method::tie;
  return c;
}

std::string comparison_csv_header() {
  return "a,method,steps_or_p,value,abs_error,winner";
}

std::string comparison_csv_rows(const MethodComparison& c, unsigned decimal_places) {
  const std::string winner = method_name(c.winner);
  std::string out;
  out += c.a.str() + ",takht," + std::to_string(c.places) + "," +
         c.takht_value.decimal_str(c.places) + "," + c.takht_error.str() + "," +
         winner + "\n";
  out += c.a.str() + ",newton," + std::to_string(c.newton_steps) + "," +
         c.newton_value.decimal_str(decimal_places) + "," + c.newton_error.str() +
         "," + winner + "\n";
  return out;
}

}  // namespace takht
