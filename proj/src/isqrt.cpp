#include "takht/isqrt.hpp"

#include <algorithm>
#include <stdexcept>

namespace takht {

namespace {

using DigitVec = std::vector<Digit>;

// Digits of 2 * value(v), most significant first. Empty stays empty.
DigitVec double_digits(const DigitVec& v) {
  DigitVec out(v.size());
  int carry = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    int d = 2 * v[i] + carry;
    out[i] = static_cast<Digit>(d % 10);
    carry = d / 10;
  }
  if (carry != 0) {
    out.insert(out.begin(), static_cast<Digit>(carry));
  }
  return out;
}

// out = digits of s * value(v). s in 1..9 and v has no leading zero, so
// the result is canonical.
void scalar_mul(const DigitVec& v, int s, DigitVec& out) {
  out.assign(v.size(), 0);
  int carry = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    int d = s * v[i] + carry;
    out[i] = static_cast<Digit>(d % 10);
    carry = d / 10;
  }
  if (carry != 0) {
    out.insert(out.begin(), static_cast<Digit>(carry));
  }
}

// value(prod) <= value(residual[0..units])? prod is canonical.
bool fits(const DigitVec& residual, const DigitVec& prod, std::size_t units) {
  std::size_t lead = 0;
  while (lead <= units && residual[lead] == 0) ++lead;
  std::size_t prefix_len = units + 1 - lead;
  if (prod.size() != prefix_len) {
    return prod.size() < prefix_len;
  }
  for (std::size_t i = 0; i < prefix_len; ++i) {
    if (residual[lead + i] != prod[i]) {
      return residual[lead + i] > prod[i];
    }
  }
  return true;  // equal
}

// residual[0..units] -= prod, units digit aligned at column `units`;
// caller has checked fits().
void subtract_at(DigitVec& residual, const DigitVec& prod, std::size_t units) {
  int borrow = 0;
  std::size_t pi = prod.size();
  std::size_t col = units + 1;
  while (col > 0 && (pi > 0 || borrow != 0)) {
    --col;
    int sub = borrow;
    if (pi > 0) sub += prod[--pi];
    int d = residual[col] - sub;
    if (d < 0) {
      d += 10;
      borrow = 1;
    } else {
      borrow = 0;
    }
    residual[col] = static_cast<Digit>(d);
  }
}

bool all_zero(const DigitVec& v) {
  return std::all_of(v.begin(), v.end(), [](Digit d) { return d == 0; });
}

// Board rows drop the parity pad column: after the first subtraction the
// padded leading position is always zero, so alignment to the input's
// significant positions is lossless.
TakhtBoard make_board(int step, const DigitVec& residual, DigitVec work,
                      std::size_t units, Digit chosen, std::size_t pad) {
  TakhtBoard b;
  b.step = step;
  b.remainder_row.digits.assign(residual.begin() + static_cast<long>(pad), residual.end());
  b.offset = units - (work.size() - 1) - pad;
  b.work_row.digits = std::move(work);
  b.chosen_digit = chosen;
  return b;
}

IsqrtResult extract(const Natural& n, bool trace_enabled, bool allow_shortcut) {
  IsqrtResult res;
  if (n.is_zero()) {
    res.root = Natural(0);
    res.remainder = Natural(0);
    return res;
  }

  const DigitString canonical = to_digits(n);
  const DigitString padded = pad_to_even(canonical);
  const std::size_t width = padded.size();
  const std::size_t pad = width - canonical.size();
  const std::size_t pair_count = width / 2;

  DigitVec residual = padded.digits;
  DigitVec root;
  root.reserve(pair_count);
  DigitVec candidate_row;
  DigitVec product;
  DigitVec best_product;

  for (std::size_t i = 1; i <= pair_count; ++i) {
    const std::size_t units = 2 * i - 1;
    DigitVec doubled = double_digits(root);

    int s = 0;
    for (int cand = 9; cand >= 1; --cand) {
      candidate_row = doubled;
      candidate_row.push_back(static_cast<Digit>(cand));
      scalar_mul(candidate_row, cand, product);
      if (fits(residual, product, units)) {
        s = cand;
        best_product = product;
        break;
      }
    }
    if (s != 0) {
      subtract_at(residual, best_product, units);
    }
    root.push_back(static_cast<Digit>(s));

    const bool last = (i == pair_count);

    if (allow_shortcut && !last && all_zero(residual)) {
      if (trace_enabled) {
        DigitVec work = doubled;
        work.push_back(static_cast<Digit>(s));
        res.trace.push_back(
            make_board(static_cast<int>(i), residual, std::move(work), units,
                       static_cast<Digit>(s), pad));
      }
      root.insert(root.end(), pair_count - i, 0);
      res.zero_shortcut_used = true;
      break;
    }

    if (trace_enabled) {
      DigitVec work;
      std::size_t work_units = units;
      if (last) {
        work = doubled;
        work.push_back(static_cast<Digit>(s));
      } else {
        work = double_digits(root);
        work_units = units + 1;
      }
      res.trace.push_back(make_board(static_cast<int>(i), residual, std::move(work),
                                     work_units, static_cast<Digit>(s), pad));
    }
  }

  DigitString root_digits;
  root_digits.digits = std::move(root);
  res.root = from_digits(root_digits);
  DigitString rem_digits;
  rem_digits.digits = std::move(residual);
  res.remainder = from_digits(rem_digits);
  return res;
}

}  // namespace

IsqrtResult isqrt(const Natural& n, bool trace_enabled) {
  return extract(n, trace_enabled, false);
}

IsqrtResult isqrt_zero_shortcut(const Natural& n, bool trace_enabled) {
  return extract(n, trace_enabled, true);
}

Natural halve_work_row(const TakhtBoard& final_board, Digit last_digit) {
  if (last_digit > 9) {
    throw std::invalid_argument("digit out of range 0..9");
  }
  Natural sum = final_board.work_row.value() + Natural(last_digit);
  if (!sum.is_even()) {
    throw std::domain_error("work row parity does not match the final digit");
  }
  return sum / Natural(2);
}

namespace {

std::string grid_row(std::size_t width, const std::vector<Digit>& digits,
                     std::size_t offset) {
  std::string row;
  for (std::size_t col = 0; col < width; ++col) {
    if (col > 0) row.push_back(' ');
    if (col >= offset && col - offset < digits.size()) {
      row.push_back(static_cast<char>('0' + digits[col - offset]));
    } else {
      row.push_back(' ');
    }
  }
  while (!row.empty() && row.back() == ' ') row.pop_back();
  return row;
}

std::string residual_row(std::size_t width, const TakhtBoard& b) {
  return grid_row(width, b.remainder_row.digits, 0);
}

}  // namespace

std::string render_trace(const Natural& n, const IsqrtResult& result,
                         const TraceRenderOptions& options) {
  const DigitString input = to_digits(n);
  const std::size_t width = input.size();
  std::string out;

  if (result.trace.empty()) {
    return out;
  }

  if (options.paper_layout) {
    out += grid_row(width, input.digits, 0);
    out.push_back('\n');
    for (std::size_t k = 0; k < result.trace.size(); ++k) {
      const TakhtBoard& b = result.trace[k];
      const bool final_style = (k + 1 == result.trace.size());
      std::size_t cand_col = b.offset + b.work_row.size() - 1 - (final_style ? 0 : 1);
      // A zero digit is written and shifted in a single move: no
      // subtraction happens, so no candidate or residual row is redrawn.
      if (b.chosen_digit != 0 || final_style) {
        out += grid_row(width, {b.chosen_digit}, cand_col);
        out.push_back('\n');
        out += residual_row(width, b);
        out.push_back('\n');
      }
      out += grid_row(width, b.work_row.digits, b.offset);
      out.push_back('\n');
    }
    return out;
  }

  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const TakhtBoard& b = result.trace[k];
    if (k > 0) out.push_back('\n');
    out += "step " + std::to_string(b.step) + "  digit " +
           std::to_string(static_cast<int>(b.chosen_digit)) + "\n";
    out += residual_row(width, b);
    out.push_back('\n');
    out += grid_row(width, b.work_row.digits, b.offset);
    out.push_back('\n');
  }
  return out;
}

}  // namespace takht
