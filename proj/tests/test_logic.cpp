#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "memos/adders.hpp"
#include "memos/netlist.hpp"
#include "memos/sd.hpp"

using namespace memos;

namespace {

// enumerate all assignments of the expression's variables and compare
bool truth_tables_equal(const Expr& x, const Expr& y) {
  std::set<std::string> vars;
  collect_vars(x, vars);
  collect_vars(y, vars);
  std::vector<std::string> names(vars.begin(), vars.end());
  REQUIRE(names.size() <= 6);
  for (unsigned mask = 0; mask < (1u << names.size()); ++mask) {
    std::map<std::string, bool> env;
    for (size_t i = 0; i < names.size(); ++i) env[names[i]] = (mask >> i) & 1;
    if (eval(x, env) != eval(y, env)) return false;
  }
  return true;
}

std::map<std::string, bool> trit_env(const char* p, const char* n, Trit t) {
  NPPair c = encode_trit(t);
  return {{p, c.p}, {n, c.n}};
}

}  // namespace

TEST_CASE("four-step cell equations") {
  Step4Cell cell = step4_cell();

  // x=0, y=1 makes a carry and a borrow digit
  std::map<std::string, bool> env{{"x_plus", false}, {"x_minus", false}, {"y", true}};
  CHECK(eval(cell.c_plus, env) == true);
  CHECK(eval(cell.z_minus, env) == true);

  env = {{"x_plus", false}, {"x_minus", false}, {"y", false}};
  CHECK(eval(cell.c_plus, env) == false);
  CHECK(eval(cell.z_minus, env) == false);

  // carry and borrow cancel in the combine step
  env = {{"z_minus", true}, {"c_prev", true}};
  CHECK(eval(cell.s_plus, env) == false);
  CHECK(eval(cell.s_minus, env) == false);

  // full digit semantics: x + y = 2*c - z and s = c_prev - z
  for (int x = -1; x <= 1; ++x) {
    for (int y = 0; y <= 1; ++y) {
      auto e = trit_env("x_plus", "x_minus", trit_from_int(x));
      e["y"] = y != 0;
      int c = eval(cell.c_plus, e) ? 1 : 0;
      int z = eval(cell.z_minus, e) ? 1 : 0;
      CHECK(x + y == 2 * c - z);
    }
  }
  for (int cp = 0; cp <= 1; ++cp) {
    for (int z = 0; z <= 1; ++z) {
      std::map<std::string, bool> e{{"z_minus", z != 0}, {"c_prev", cp != 0}};
      int s = (eval(cell.s_plus, e) ? 1 : 0) - (eval(cell.s_minus, e) ? 1 : 0);
      CHECK(s == cp - z);
    }
  }
}

TEST_CASE("three-step cell equations") {
  Step3Cell cell = step3_cell();

  // -1 + -1: z = -2 alone, no transfer
  auto env = trit_env("a_plus", "a_minus", Trit::MinusOne);
  env.merge(trit_env("b_plus", "b_minus", Trit::MinusOne));
  CHECK(eval(cell.z_plus, env) == true);
  CHECK(eval(cell.z_minus, env) == false);
  CHECK(eval(cell.t_next, env) == false);

  env = {{"a_plus", false}, {"a_minus", false}, {"b_plus", false}, {"b_minus", false}};
  CHECK(eval(cell.t_next, env) == false);
  CHECK(eval(cell.z_plus, env) == false);
  CHECK(eval(cell.z_minus, env) == false);

  // step 1 semantics: a + b = 2*t - 2*z_plus - z_minus, z in {-2,-1,0}
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      auto e = trit_env("a_plus", "a_minus", trit_from_int(a));
      e.merge(trit_env("b_plus", "b_minus", trit_from_int(b)));
      int t = eval(cell.t_next, e) ? 1 : 0;
      int zp = eval(cell.z_plus, e) ? 1 : 0;
      int zm = eval(cell.z_minus, e) ? 1 : 0;
      CHECK(zp + zm <= 1);
      CHECK(a + b == 2 * t - 2 * zp - zm);
    }
  }
  // step 2 semantics: t + z = -2*t' + z'
  for (int t = 0; t <= 1; ++t) {
    for (int zcode = 0; zcode < 3; ++zcode) {
      int zp = zcode == 2 ? 1 : 0, zm = zcode == 1 ? 1 : 0;
      std::map<std::string, bool> e{{"t", t != 0}, {"z_plus", zp != 0}, {"z_minus", zm != 0}};
      int tp = eval(cell.tp_next, e) ? 1 : 0;
      int zprime = eval(cell.z_prime, e) ? 1 : 0;
      CHECK(t - 2 * zp - zm == -2 * tp + zprime);
    }
  }
  // step 3 semantics: s = z' - t'
  for (int tp = 0; tp <= 1; ++tp) {
    for (int zprime = 0; zprime <= 1; ++zprime) {
      std::map<std::string, bool> e{{"t_prime", tp != 0}, {"z_prime", zprime != 0}};
      int s = (eval(cell.s_plus, e) ? 1 : 0) - (eval(cell.s_minus, e) ? 1 : 0);
      CHECK(s == zprime - tp);
    }
  }
}

TEST_CASE("the uncorrected final-stage minus term fails the digit semantics") {
  // s_minus written without the complement cannot represent s = z' - t'
  Expr wrong = band(var("t_prime"), var("z_prime"));
  std::map<std::string, bool> e{{"t_prime", true}, {"z_prime", false}};
  CHECK(eval(wrong, e) == false);  // would need -1 here
  e = {{"t_prime", true}, {"z_prime", true}};
  CHECK(eval(wrong, e) == true);  // would need 0 here
}

TEST_CASE("three-step worked trace") {
  // x = 00T0 (-2), y = 01T0 (+2); step 1 yields z = (0,-1,-2,0) msb-first and
  // transfer 0,1,0,0,0 after the left shift
  Step3Cell cell = step3_cell();
  SDNumber x = SDNumber::parse("00T0");
  SDNumber y = SDNumber::parse("01T0");
  int expect_z[4] = {0, -2, -1, 0};        // lsb-first
  int expect_t[5] = {0, 0, 0, 1, 0};       // lsb-first, t[0] boundary
  for (int i = 0; i < 4; ++i) {
    auto e = trit_env("a_plus", "a_minus", x.digit(i));
    e.merge(trit_env("b_plus", "b_minus", y.digit(i)));
    int zp = eval(cell.z_plus, e) ? 1 : 0;
    int zm = eval(cell.z_minus, e) ? 1 : 0;
    CHECK(-2 * zp - zm == expect_z[i]);
    CHECK((eval(cell.t_next, e) ? 1 : 0) == expect_t[i + 1]);
  }
}

TEST_CASE("lowering produces the published NAND form for the carry") {
  Step4Cell cell = step4_cell();
  Expr lowered = lower_to_nand_nor(cell.c_plus);
  Expr expected = bnand(bnot(var("x_plus")), bnand(var("y"), bnot(var("x_minus"))));
  CHECK(same_structure(lowered, expected));
}

TEST_CASE("lowering soundness for every cell expression") {
  Step4Cell c4 = step4_cell();
  Step3Cell c3 = step3_cell();
  for (const Expr& e : {c4.c_plus, c4.z_minus, c4.s_plus, c4.s_minus, c3.t_next, c3.z_plus,
                        c3.z_minus, c3.tp_next, c3.z_prime, c3.s_plus, c3.s_minus}) {
    Expr low = lower_to_nand_nor(e);
    CHECK(is_nand_nor_form(low));
    CHECK(truth_tables_equal(e, low));
  }
  // identity on a bare variable
  Expr v = var("v");
  CHECK(same_structure(lower_to_nand_nor(v), v));
}

TEST_CASE("netlist construction and evaluation") {
  Netlist nl;
  int a = nl.add_input("a");
  int b = nl.add_input("b");
  int g = nl.add_gate(GateKind::Nand, a, b);
  nl.set_output("y", nl.add_not(g));
  CHECK(nl.eval({{"a", true}, {"b", true}}).at("y") == true);
  CHECK(nl.eval({{"a", true}, {"b", false}}).at("y") == false);
  CHECK_THROWS_AS(nl.eval({{"a", true}}), MissingInput);

  // structural hashing: the same gate is not emitted twice
  CHECK(nl.add_gate(GateKind::Nand, a, b) == g);
  CHECK(nl.add_gate(GateKind::Nand, b, a) == g);
  // folding
  int one = nl.add_const(true);
  CHECK(nl.add_gate(GateKind::Nand, a, one) == nl.add_not(a));
  CHECK(nl.add_not(nl.add_not(a)) == a);
  CHECK(nl.gate(nl.add_gate(GateKind::Xor, a, a)).kind == GateKind::Const);
}

TEST_CASE("netlist agrees with direct expression evaluation") {
  Step3Cell cell = step3_cell();
  Netlist nl;
  std::map<std::string, int> env;
  for (const char* name : {"a_plus", "a_minus", "b_plus", "b_minus"})
    env[name] = nl.add_input(name);
  std::map<Expr, int> memo;
  nl.set_output("t", emit_expr(nl, lower_to_nand_nor(cell.t_next), env, memo));
  nl.set_output("zm", emit_expr(nl, lower_to_nand_nor(cell.z_minus), env, memo));

  SDGenerator gen(99);
  Splitmix64 bits(7);
  for (int k = 0; k < 1000; ++k) {
    uint64_t r = bits.next();
    std::map<std::string, bool> e{{"a_plus", (r & 1) != 0},
                                  {"a_minus", (r & 2) != 0},
                                  {"b_plus", (r & 4) != 0},
                                  {"b_minus", (r & 8) != 0}};
    auto out = nl.eval(e);
    CHECK(out.at("t") == eval(cell.t_next, e));
    CHECK(out.at("zm") == eval(cell.z_minus, e));
  }
}

TEST_CASE("sd + binary subadder reproduces the worked example") {
  // x = 1T11 (7) plus binary 0110 (6) = 1T11T (13)
  SubadderNetlist sub = build_sd_plus_binary(4);
  SDNumber x = SDNumber::parse("1T11");
  std::vector<uint8_t> y{0, 1, 1, 0};  // lsb-first: 6
  SDNumber s = eval_subadder(sub, x, y);
  CHECK(s == SDNumber::parse("1T11T"));
  CHECK(s.value() == 13);
}

TEST_CASE("subtraction stage identity") {
  SubadderNetlist sub = build_sd_minus_binary(8);
  SDGenerator gen(31);
  Splitmix64 bits(13);
  for (int k = 0; k < 200; ++k) {
    SDNumber x = gen.next(8);
    std::vector<uint8_t> y(8);
    uint64_t r = bits.next();
    for (int i = 0; i < 8; ++i) y[static_cast<size_t>(i)] = (r >> i) & 1;
    SDNumber s = eval_subadder(sub, x, y);
    CHECK(s.value() == x.value() - value_bin(y));
  }
}

TEST_CASE("adders are lowered and well formed") {
  for (AdderFamily f : {AdderFamily::Step3, AdderFamily::Step4}) {
    AdderNetlist adder = build_adder(f, 6);
    CHECK(adder.netlist.lowered());
    CHECK(adder.out_width == (f == AdderFamily::Step3 ? 7 : 8));
  }
}

TEST_CASE("exhaustive adder equivalence at width 4") {
  for (AdderFamily f : {AdderFamily::Step3, AdderFamily::Step4}) {
    AdderNetlist adder = build_adder(f, 4);
    for (int ca = 0; ca < 81; ++ca) {
      for (int cb = 0; cb < 81; ++cb) {
        std::vector<Trit> da, db;
        int xa = ca, xb = cb;
        for (int i = 0; i < 4; ++i) {
          da.push_back(trit_from_int(xa % 3 - 1));
          db.push_back(trit_from_int(xb % 3 - 1));
          xa /= 3;
          xb /= 3;
        }
        SDNumber a{da}, b{db};
        SDNumber s = eval_adder(adder, a, b);
        REQUIRE(s.value() == oracle_add(a, b));
      }
    }
  }
}

TEST_CASE("worked end-to-end sums") {
  AdderNetlist step3 = build_step3_adder(4);
  SDNumber s = eval_adder(step3, SDNumber::parse("00T0"), SDNumber::parse("01T0"));
  CHECK(s.value() == 0);

  AdderNetlist step4 = build_step4_adder(4);
  SDNumber t = eval_adder(step4, SDNumber::parse("1T11"), SDNumber::parse("0110"));
  CHECK(t.value() == 13);
}

TEST_CASE("identity and randomized equivalence") {
  AdderNetlist step3 = build_step3_adder(8);
  AdderNetlist step4 = build_step4_adder(8);
  SDGenerator gen(7);
  SDNumber zero = SDNumber::zero(8);
  for (int k = 0; k < 100; ++k) {
    SDNumber x = gen.next(8);
    CHECK(eval_adder(step3, x, zero).value() == x.value());
    CHECK(eval_adder(step4, x, zero).value() == x.value());
  }
  for (int width : {16, 64}) {
    AdderNetlist a3 = build_step3_adder(width);
    AdderNetlist a4 = build_step4_adder(width);
    SDGenerator g2(width);
    for (int k = 0; k < 300; ++k) {
      auto [a, b] = g2.next_pair(width);
      CHECK(represents_sum(a, b, eval_adder(a3, a, b)));
      CHECK(represents_sum(a, b, eval_adder(a4, a, b)));
    }
  }
}

TEST_CASE("depth metrics") {
  AdderNetlist s3_8 = build_step3_adder(8);
  AdderNetlist s3_64 = build_step3_adder(64);
  AdderNetlist s4_8 = build_step4_adder(8);
  AdderNetlist s4_64 = build_step4_adder(64);
  CHECK(depth_metrics(s3_8).block_depth == 3);
  CHECK(depth_metrics(s3_64).block_depth == 3);
  CHECK(depth_metrics(s4_8).block_depth == 4);
  CHECK(depth_metrics(s4_64).block_depth == 4);
  // per-digit structure makes gate count close to linear
  for (AdderFamily f : {AdderFamily::Step3, AdderFamily::Step4}) {
    for (int n : {8, 16, 32}) {
      double ratio = double(depth_metrics(build_adder(f, 2 * n)).gate_count) /
                     double(depth_metrics(build_adder(f, n)).gate_count);
      CHECK(ratio > 1.9);
      CHECK(ratio < 2.1);
    }
  }
}

TEST_CASE("outputs decode to valid digit codings") {
  AdderNetlist adder = build_step4_adder(8);
  SDGenerator gen(41);
  for (int k = 0; k < 500; ++k) {
    auto [a, b] = gen.next_pair(8);
    CHECK_NOTHROW(eval_adder(adder, a, b));  // decode_np throws on (1,1)
  }
}

TEST_CASE("netlist dump round trip") {
  AdderNetlist adder = build_step3_adder(3);
  std::string text = adder.netlist.dump_string();
  std::istringstream in(text);
  Netlist parsed = Netlist::parse(in);
  CHECK(parsed.dump_string() == text);

  // parsed netlist evaluates identically
  SDGenerator gen(8);
  auto [a, b] = gen.next_pair(3);
  std::map<std::string, bool> env;
  for (int i = 0; i < 3; ++i) {
    NPPair ca = encode_trit(a.digit(i)), cb = encode_trit(b.digit(i));
    env["a" + std::to_string(i) + ".n"] = ca.n;
    env["a" + std::to_string(i) + ".p"] = ca.p;
    env["b" + std::to_string(i) + ".n"] = cb.n;
    env["b" + std::to_string(i) + ".p"] = cb.p;
  }
  CHECK(adder.netlist.eval(env) == parsed.eval(env));
}

TEST_CASE("guard digit stays clear across random operands") {
  AdderNetlist adder = build_step3_adder(6);
  SDGenerator gen(77);
  for (int k = 0; k < 300; ++k) {
    auto [a, b] = gen.next_pair(6);
    CHECK_NOTHROW(eval_adder(adder, a, b));
  }
  CHECK_THROWS_AS(eval_adder(adder, SDNumber::zero(5), SDNumber::zero(6)), WidthMismatch);
}
