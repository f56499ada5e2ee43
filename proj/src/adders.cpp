#include "memos/adders.hpp"

#include <algorithm>

namespace memos {

const char* family_name(AdderFamily f) {
  return f == AdderFamily::Step3 ? "step3" : "step4";
}

AdderFamily family_from_string(const std::string& s) {
  if (s == "step3") return AdderFamily::Step3;
  if (s == "step4") return AdderFamily::Step4;
  throw IoFailure("unknown adder family '" + s + "' (expected step3 or step4)");
}

Step4Cell step4_cell() {
  Expr xp = var("x_plus"), xn = var("x_minus"), y = var("y"), cp = var("c_prev");
  Step4Cell cell;
  cell.c_plus = bor(xp, band(y, bnot(xn)));
  cell.z_minus = bxor(bor(xp, xn), y);
  cell.s_plus = band(bnot(var("z_minus")), cp);
  cell.s_minus = band(bnot(cp), var("z_minus"));
  return cell;
}

Step3Cell step3_cell() {
  Expr ap = var("a_plus"), an = var("a_minus"), bp = var("b_plus"), bn = var("b_minus");
  Step3Cell cell;
  cell.t_next = bor(band(ap, bnot(bn)), band(bnot(an), bp));
  cell.z_plus = band(an, bn);
  cell.z_minus = bor(bor(band(band(bnot(ap), bnot(an)), bn), band(an, band(bnot(bp), bnot(bn)))),
                     bor(band(ap, band(bnot(bp), bnot(bn))), band(band(bnot(ap), bnot(an)), bp)));

  Expr t = var("t"), zp = var("z_plus"), zm = var("z_minus");
  cell.tp_next = bor(band(bnot(t), zm), zp);
  cell.z_prime = bxor(t, zm);

  Expr tp = var("t_prime"), zprime = var("z_prime");
  cell.s_plus = band(bnot(tp), zprime);
  // derived by truth-table synthesis from s_i = z'_i - t'_i (see CORRECTIONS.md)
  cell.s_minus = band(tp, bnot(zprime));
  return cell;
}

namespace {

struct LoweredStep4 {
  Expr c_plus, z_minus, s_plus, s_minus;
  LoweredStep4() {
    Step4Cell c = step4_cell();
    c_plus = lower_to_nand_nor(c.c_plus);
    z_minus = lower_to_nand_nor(c.z_minus);
    s_plus = lower_to_nand_nor(c.s_plus);
    s_minus = lower_to_nand_nor(c.s_minus);
  }
};

struct LoweredStep3 {
  Expr t_next, z_plus, z_minus, tp_next, z_prime, s_plus, s_minus;
  LoweredStep3() {
    Step3Cell c = step3_cell();
    t_next = lower_to_nand_nor(c.t_next);
    z_plus = lower_to_nand_nor(c.z_plus);
    z_minus = lower_to_nand_nor(c.z_minus);
    tp_next = lower_to_nand_nor(c.tp_next);
    z_prime = lower_to_nand_nor(c.z_prime);
    s_plus = lower_to_nand_nor(c.s_plus);
    s_minus = lower_to_nand_nor(c.s_minus);
  }
};

const LoweredStep4& lowered_step4() {
  static const LoweredStep4 cell;
  return cell;
}

const LoweredStep3& lowered_step3() {
  static const LoweredStep3 cell;
  return cell;
}

struct DigitIds {
  int n, p;
};

// one SD + binary addition stage; x has |xs| digits, ys is zero-extended to
// match; result has |xs| + 1 digit pairs
std::vector<DigitIds> emit_sd_plus_binary_stage(Netlist& nl, const std::vector<DigitIds>& xs,
                                                std::vector<int> ys) {
  const LoweredStep4& cell = lowered_step4();
  const int n = static_cast<int>(xs.size());
  const int zero = nl.add_const(false);
  ys.resize(static_cast<size_t>(n), zero);

  std::vector<int> carries(static_cast<size_t>(n));
  std::vector<int> z(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::map<std::string, int> env{{"x_plus", xs[static_cast<size_t>(i)].p},
                                   {"x_minus", xs[static_cast<size_t>(i)].n},
                                   {"y", ys[static_cast<size_t>(i)]}};
    std::map<Expr, int> memo;
    carries[static_cast<size_t>(i)] = emit_expr(nl, cell.c_plus, env, memo);
    z[static_cast<size_t>(i)] = emit_expr(nl, cell.z_minus, env, memo);
  }

  std::vector<DigitIds> out(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    int zi = i < n ? z[static_cast<size_t>(i)] : zero;
    int cp = i > 0 ? carries[static_cast<size_t>(i - 1)] : zero;
    std::map<std::string, int> env{{"z_minus", zi}, {"c_prev", cp}};
    std::map<Expr, int> memo;
    out[static_cast<size_t>(i)].p = emit_expr(nl, cell.s_plus, env, memo);
    out[static_cast<size_t>(i)].n = emit_expr(nl, cell.s_minus, env, memo);
  }
  return out;
}

std::vector<DigitIds> negate_wires(std::vector<DigitIds> xs) {
  for (auto& d : xs) std::swap(d.n, d.p);  // (n,p) exchange: zero gates
  return xs;
}

std::vector<DigitIds> add_operand_inputs(Netlist& nl, const std::string& prefix, int width) {
  std::vector<DigitIds> ids(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i) {
    ids[static_cast<size_t>(i)].n = nl.add_input(prefix + std::to_string(i) + ".n");
    ids[static_cast<size_t>(i)].p = nl.add_input(prefix + std::to_string(i) + ".p");
  }
  return ids;
}

void set_sum_outputs(Netlist& nl, const std::vector<DigitIds>& sums) {
  for (size_t i = 0; i < sums.size(); ++i) {
    nl.set_output("s" + std::to_string(i) + ".n", sums[i].n);
    nl.set_output("s" + std::to_string(i) + ".p", sums[i].p);
  }
}

void check_width(int width) {
  if (width < 1 || width > SDNumber::kMaxWidth) throw Overflow("adder width out of range");
}

}  // namespace

SubadderNetlist build_sd_plus_binary(int width) {
  check_width(width);
  SubadderNetlist sub;
  sub.width = width;
  sub.out_width = width + 1;
  auto xs = add_operand_inputs(sub.netlist, "a", width);
  std::vector<int> ys(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i)
    ys[static_cast<size_t>(i)] = sub.netlist.add_input("y" + std::to_string(i));
  set_sum_outputs(sub.netlist, emit_sd_plus_binary_stage(sub.netlist, xs, ys));
  return sub;
}

SubadderNetlist build_sd_minus_binary(int width) {
  check_width(width);
  SubadderNetlist sub;
  sub.width = width;
  sub.out_width = width + 1;
  auto xs = add_operand_inputs(sub.netlist, "a", width);
  std::vector<int> ys(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i)
    ys[static_cast<size_t>(i)] = sub.netlist.add_input("y" + std::to_string(i));
  // sd - B = -(-sd + B): both negations are (n,p) wire exchanges
  auto sums = emit_sd_plus_binary_stage(sub.netlist, negate_wires(xs), ys);
  set_sum_outputs(sub.netlist, negate_wires(sums));
  return sub;
}

AdderNetlist build_step4_adder(int width) {
  check_width(width);
  AdderNetlist adder;
  adder.family = AdderFamily::Step4;
  adder.width = width;
  adder.out_width = width + 2;
  adder.steps = 4;
  Netlist& nl = adder.netlist;

  auto as = add_operand_inputs(nl, "a", width);
  auto bs = add_operand_inputs(nl, "b", width);
  std::vector<int> b_pos(static_cast<size_t>(width)), b_neg(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i) {
    b_pos[static_cast<size_t>(i)] = bs[static_cast<size_t>(i)].p;
    b_neg[static_cast<size_t>(i)] = bs[static_cast<size_t>(i)].n;
  }

  // a + b = (a + b_pos) - b_neg; subtraction is exchange/add/exchange
  auto u = emit_sd_plus_binary_stage(nl, as, b_pos);                 // steps 1-2
  auto v = emit_sd_plus_binary_stage(nl, negate_wires(u), b_neg);    // steps 3-4
  set_sum_outputs(nl, negate_wires(v));
  return adder;
}

AdderNetlist build_step3_adder(int width) {
  check_width(width);
  AdderNetlist adder;
  adder.family = AdderFamily::Step3;
  adder.width = width;
  adder.out_width = width + 1;
  adder.steps = 3;
  adder.has_guard = true;
  Netlist& nl = adder.netlist;
  const LoweredStep3& cell = lowered_step3();

  auto as = add_operand_inputs(nl, "a", width);
  auto bs = add_operand_inputs(nl, "b", width);
  const int zero = nl.add_const(false);

  // step 1: digit positions 0..N-1 emit z_i and the left-shifted transfer t
  std::vector<int> t(static_cast<size_t>(width) + 1, zero);  // t[0] = 0
  std::vector<int> zp(static_cast<size_t>(width) + 1, zero);
  std::vector<int> zm(static_cast<size_t>(width) + 1, zero);
  for (int i = 0; i < width; ++i) {
    std::map<std::string, int> env{{"a_plus", as[static_cast<size_t>(i)].p},
                                   {"a_minus", as[static_cast<size_t>(i)].n},
                                   {"b_plus", bs[static_cast<size_t>(i)].p},
                                   {"b_minus", bs[static_cast<size_t>(i)].n}};
    std::map<Expr, int> memo;
    t[static_cast<size_t>(i) + 1] = emit_expr(nl, cell.t_next, env, memo);
    zp[static_cast<size_t>(i)] = emit_expr(nl, cell.z_plus, env, memo);
    zm[static_cast<size_t>(i)] = emit_expr(nl, cell.z_minus, env, memo);
  }

  // step 2: positions 0..N combine t_i with z_i
  std::vector<int> tp(static_cast<size_t>(width) + 2, zero);  // t'[0] = 0
  std::vector<int> zprime(static_cast<size_t>(width) + 2, zero);
  for (int i = 0; i <= width; ++i) {
    std::map<std::string, int> env{{"t", t[static_cast<size_t>(i)]},
                                   {"z_plus", zp[static_cast<size_t>(i)]},
                                   {"z_minus", zm[static_cast<size_t>(i)]}};
    std::map<Expr, int> memo;
    tp[static_cast<size_t>(i) + 1] = emit_expr(nl, cell.tp_next, env, memo);
    zprime[static_cast<size_t>(i)] = emit_expr(nl, cell.z_prime, env, memo);
  }

  // step 3: positions 0..N+1; the top position is the guard digit
  std::vector<DigitIds> sums(static_cast<size_t>(width) + 2);
  for (int i = 0; i <= width + 1; ++i) {
    std::map<std::string, int> env{{"t_prime", tp[static_cast<size_t>(i)]},
                                   {"z_prime", zprime[static_cast<size_t>(i)]}};
    std::map<Expr, int> memo;
    sums[static_cast<size_t>(i)].p = emit_expr(nl, cell.s_plus, env, memo);
    sums[static_cast<size_t>(i)].n = emit_expr(nl, cell.s_minus, env, memo);
  }
  DigitIds guard = sums.back();
  sums.pop_back();
  set_sum_outputs(nl, sums);
  nl.set_output("guard.n", guard.n);
  nl.set_output("guard.p", guard.p);
  return adder;
}

AdderNetlist build_adder(AdderFamily f, int width) {
  return f == AdderFamily::Step3 ? build_step3_adder(width) : build_step4_adder(width);
}

namespace {

std::vector<uint8_t> operand_bits(const SDNumber& a, const SDNumber& b, int y_width,
                                  const std::vector<uint8_t>* y) {
  // input_order is a0.n a0.p ... then b/y inputs, matching builder order
  std::vector<uint8_t> in;
  in.reserve(static_cast<size_t>(a.width()) * 2 + static_cast<size_t>(b.width()) * 2 +
             static_cast<size_t>(y_width));
  for (int i = 0; i < a.width(); ++i) {
    NPPair c = encode_trit(a.digit(i));
    in.push_back(c.n ? 1 : 0);
    in.push_back(c.p ? 1 : 0);
  }
  if (y) {
    for (int i = 0; i < y_width; ++i) in.push_back((*y)[static_cast<size_t>(i)] ? 1 : 0);
  } else {
    for (int i = 0; i < b.width(); ++i) {
      NPPair c = encode_trit(b.digit(i));
      in.push_back(c.n ? 1 : 0);
      in.push_back(c.p ? 1 : 0);
    }
  }
  return in;
}

SDNumber decode_sum(const Netlist& nl, const std::vector<uint8_t>& values, int out_width) {
  std::vector<Trit> digits(static_cast<size_t>(out_width));
  for (int i = 0; i < out_width; ++i) {
    int nid = nl.outputs().at("s" + std::to_string(i) + ".n");
    int pid = nl.outputs().at("s" + std::to_string(i) + ".p");
    NPPair c{values[static_cast<size_t>(nid)] != 0, values[static_cast<size_t>(pid)] != 0};
    digits[static_cast<size_t>(i)] = decode_np(c);
  }
  return SDNumber(std::move(digits));
}

}  // namespace

SDNumber eval_adder(const AdderNetlist& adder, const SDNumber& a, const SDNumber& b) {
  if (a.width() != adder.width || b.width() != adder.width)
    throw WidthMismatch("operand width does not match the adder");
  std::vector<uint8_t> values = adder.netlist.eval_values(operand_bits(a, b, 0, nullptr));
  if (adder.has_guard) {
    int gn = adder.netlist.outputs().at("guard.n");
    int gp = adder.netlist.outputs().at("guard.p");
    if (values[static_cast<size_t>(gn)] || values[static_cast<size_t>(gp)])
      throw GuardViolation("three-step adder guard digit is nonzero");
  }
  return decode_sum(adder.netlist, values, adder.out_width);
}

SDNumber eval_subadder(const SubadderNetlist& sub, const SDNumber& x,
                       const std::vector<uint8_t>& y) {
  if (x.width() != sub.width || static_cast<int>(y.size()) != sub.width)
    throw WidthMismatch("operand width does not match the subadder");
  std::vector<uint8_t> values = sub.netlist.eval_values(operand_bits(x, x, sub.width, &y));
  return decode_sum(sub.netlist, values, sub.out_width);
}

DepthMetrics depth_metrics(const AdderNetlist& adder) {
  return {adder.steps, adder.netlist.levels(), adder.netlist.gate_count()};
}

}  // namespace memos
