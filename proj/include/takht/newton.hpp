#pragma once

#include "takht/natural.hpp"
#include "takht/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace takht {

// Fixed-point iteration u_{n+1} = (u_n^2 + a) / (2 u_n), kept in exact
// rationals throughout. Denominators roughly double in width per step,
// so runs are capped.
struct NewtonState {
  Rational iterate;  // u_n, positive
  unsigned step = 0;
  Natural target;  // a
};

NewtonState newton_step(const NewtonState& state);  // throws on a zero iterate

struct NewtonRecord {
  unsigned step = 0;
  Rational iterate;
  Rational error;              // |u^2 - a|
  unsigned correct_digits = 0; // leading decimal digits shared with the reference root
};

struct NewtonRun {
  Natural target;
  Rational start;
  Rational tolerance;
  unsigned max_steps = 0;
  unsigned reference_places = 0;
  std::vector<NewtonRecord> records;  // step 0 first
  bool converged = false;
  unsigned steps_taken = 0;
};

inline constexpr unsigned kDefaultNewtonCap = 16;
inline constexpr unsigned kDefaultReferencePlaces = 40;

// Iterates from u0 until |u^2 - a| <= tolerance or max_steps is hit,
// recording every iterate exactly. The correct-digit counts compare each
// iterate, truncated, against the board method's expansion of sqrt(a)
// with reference_places decimal places (counts therefore saturate there).
NewtonRun newton_run(const Natural& a, const Rational& u0, unsigned max_steps,
                     const Rational& tolerance,
                     unsigned reference_places = kDefaultReferencePlaces);

enum class Method { takht, newton, tie };

const char* method_name(Method m);

// Precision duel between the board expansion at p decimal places and the
// Newton iterate after a fixed number of steps. "Precision" means the
// exact distance |value^2 - a|; that choice is recorded with the result.
struct MethodComparison {
  Natural a;
  unsigned places = 0;        // p for the board side
  unsigned newton_steps = 0;  // steps taken on the Newton side
  Rational takht_value;
  Rational newton_value;
  Rational takht_error;
  Rational newton_error;
  Method winner = Method::tie;
  static constexpr const char* metric = "abs(value^2 - a)";
};

MethodComparison compare_methods(const Natural& a, unsigned places,
                                 unsigned newton_steps,
                                 const std::optional<Rational>& u0 = std::nullopt);

std::string comparison_csv_header();
std::string comparison_csv_rows(const MethodComparison& c, unsigned decimal_places = 12);

}  // namespace takht
