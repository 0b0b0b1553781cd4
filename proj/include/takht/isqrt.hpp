#pragma once

#include "takht/natural.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace takht {

// One dust-board state, recorded after a subtract-and-shift move.
// Rows are aligned to the significant decimal positions of the input:
// remainder_row is zero-filled to the input's width, and offset is the
// position index of the work row's leftmost digit on that grid.
struct TakhtBoard {
  int step = 0;  // 1-based iteration ordinal
  DigitString remainder_row;
  DigitString work_row;
  std::size_t offset = 0;
  Digit chosen_digit = 0;
};

struct IsqrtResult {
  Natural root;       // E = floor(sqrt(n))
  Natural remainder;  // R = n - E^2, with 0 <= R <= 2E
  std::vector<TakhtBoard> trace;
  bool zero_shortcut_used = false;
};

// Digit-by-digit square root on the decimal board.
//
// The input is left-padded to an even digit count and consumed in pairs,
// left to right. At iteration i the work row holds the doubled root
// prefix with a candidate digit s appended; s is the largest digit in
// 9..0 whose product s * (work row) subtracts from the residual prefix
// without underflow. After the subtraction the candidate digit is
// doubled in place and the whole row shifts one rank to the right,
// except on the last iteration, which leaves the row as written.
// With tracing enabled each iteration records the board after its move.
IsqrtResult isqrt(const Natural& n, bool trace_enabled = false);

// Same contract as isqrt for (root, remainder), but terminates early
// when the residual reaches zero with 2m digit positions of the input
// still unprocessed: those positions are necessarily all zeros, and m
// zeros are appended to the root directly.
IsqrtResult isqrt_zero_shortcut(const Natural& n, bool trace_enabled = false);

// Recovers the root from the last board of a completed run: the work
// row W carries the doubled positions, so the root is (W + s) / 2 where
// s is the final root digit placed. Throws if W and s disagree in
// parity, which cannot happen on boards produced by isqrt and signals a
// corrupted trace. On a shortcut run this recovers the root prefix; the
// skipped trailing zeros are appended separately.
Natural halve_work_row(const TakhtBoard& final_board, Digit last_digit);

struct TraceRenderOptions {
  bool paper_layout = false;  // single stacked table instead of one board per step
};

// ASCII rendering of a traced run, digit columns right-aligned and
// single-space separated.
std::string render_trace(const Natural& n, const IsqrtResult& result,
                         const TraceRenderOptions& options = {});

}  // namespace takht
