#pragma once

#include "takht/approx.hpp"
#include "takht/isqrt.hpp"
#include "takht/newton.hpp"
#include "takht/scale.hpp"
#include "takht/verify.hpp"

#include "json.hpp"

namespace takht {

// JSON shapes for the machine-readable CLI output. Big numbers are
// decimal strings and exact fractions are "num/den"; small structural
// fields (steps, offsets, places) stay native ints.

nlohmann::json trace_to_json(const std::vector<TakhtBoard>& trace);
nlohmann::json isqrt_to_json(const Natural& n, const IsqrtResult& result,
                             bool include_trace);

nlohmann::json approximation_to_json(const Natural& n, const Approximation& a);
nlohmann::json comparison_to_json(const RuleComparison& c);

nlohmann::json scaled_root_to_json(const Natural& n, const ScaledRoot& s);
nlohmann::json sexagesimal_to_json(const FixedPointRoot& fixed,
                                   const SexagesimalExpansion& expansion,
                                   const Natural& n);

nlohmann::json verification_to_json(const Natural& n, const Natural& root,
                                    const Natural& remainder,
                                    const VerificationReport& report);
nlohmann::json screen_to_json(const Natural& n, const SquareScreen& screen);

nlohmann::json newton_run_to_json(const NewtonRun& run);
nlohmann::json method_comparison_to_json(const MethodComparison& c);

}  // namespace takht
