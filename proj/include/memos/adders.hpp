#pragma once

#include <string>

#include "memos/netlist.hpp"
#include "memos/sd.hpp"

namespace memos {

enum class AdderFamily { Step3, Step4 };

const char* family_name(AdderFamily f);
AdderFamily family_from_string(const std::string& s);

// Per-digit equations of the four-step adder (one SD operand, one binary
// operand) over inputs {x_plus, x_minus, y, c_prev}:
//   c_plus  = x_plus | (y & !x_minus)          carry, weight +2, shifts left
//   z_minus = (x_plus | x_minus) ^ y           weight -1
//   s_plus  = !z_minus & c_prev
//   s_minus = !c_prev & z_minus
// so that x_i + y_i = 2*c_i - z_i and s_i = c_{i-1} - z_i.
struct Step4Cell {
  Expr c_plus, z_minus, s_plus, s_minus;
};
Step4Cell step4_cell();

// Per-digit equations of the three-step adder (two SD operands) over inputs
// {a_plus, a_minus, b_plus, b_minus}, {t, z_plus, z_minus}, {t_prime, z_prime}.
// Digit semantics: step 1 encodes a_i + b_i = 2*t_{i+1} + z_i with
// z_i = -2*z_plus - z_minus in {-2,-1,0}; step 2 encodes t_i + z_i =
// -2*t'_{i+1} + z'_i; step 3 emits s_i = z'_i - t'_i.
// The final stage is the truth-table-derived form s_minus = t' & !z'; see
// CORRECTIONS.md for the derivation record.
struct Step3Cell {
  Expr t_next, z_plus, z_minus;  // step 1
  Expr tp_next, z_prime;         // step 2
  Expr s_plus, s_minus;          // step 3
};
Step3Cell step3_cell();

struct AdderNetlist {
  Netlist netlist;
  AdderFamily family;
  int width = 0;      // N input digits per operand
  int out_width = 0;  // N+1 (three-step) or N+2 (four-step)
  int steps = 0;      // block depth: 3 or 4
  bool has_guard = false;
  // inputs "a{i}.n"/"a{i}.p"/"b{i}.n"/"b{i}.p"; outputs "s{i}.n"/"s{i}.p";
  // the three-step adder adds "guard.n"/"guard.p", asserted zero
};

AdderNetlist build_step4_adder(int width);
AdderNetlist build_step3_adder(int width);
AdderNetlist build_adder(AdderFamily f, int width);

// Single SD + binary stage of the four-step adder, exposed for direct tests.
// Inputs "a{i}.n"/"a{i}.p" and "y{i}"; outputs "s{i}.n"/"s{i}.p", width N+1.
struct SubadderNetlist {
  Netlist netlist;
  int width = 0;
  int out_width = 0;
};
SubadderNetlist build_sd_plus_binary(int width);
// sd - B via the exchange/add/exchange construction (wire swaps only)
SubadderNetlist build_sd_minus_binary(int width);

// Ideal logic evaluation of a built adder. Throws WidthMismatch for operand
// width, GuardViolation if the three-step guard digit is nonzero, and
// InvalidCoding if an output pair decodes to (1,1).
SDNumber eval_adder(const AdderNetlist& adder, const SDNumber& a, const SDNumber& b);

SDNumber eval_subadder(const SubadderNetlist& sub, const SDNumber& x,
                       const std::vector<uint8_t>& y);

struct DepthMetrics {
  int block_depth;  // family step count, independent of width
  int gate_levels;
  int gate_count;
};
DepthMetrics depth_metrics(const AdderNetlist& adder);

}  // namespace memos
