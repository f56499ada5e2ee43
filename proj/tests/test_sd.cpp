#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "memos/sd.hpp"

using namespace memos;

TEST_CASE("trit coding table") {
  CHECK(encode_trit(Trit::MinusOne) == NPPair{true, false});
  CHECK(encode_trit(Trit::Zero) == NPPair{false, false});
  CHECK(encode_trit(Trit::PlusOne) == NPPair{false, true});

  CHECK(decode_np({true, false}) == Trit::MinusOne);
  CHECK(decode_np({false, false}) == Trit::Zero);
  CHECK(decode_np({false, true}) == Trit::PlusOne);
  CHECK_THROWS_AS(decode_np({true, true}), InvalidCoding);

  // bijective on all three digits
  for (int v : {-1, 0, 1}) {
    Trit t = trit_from_int(v);
    CHECK(decode_np(encode_trit(t)) == t);
  }
  CHECK_THROWS_AS(trit_from_int(2), InvalidCoding);
}

TEST_CASE("digit values and redundancy") {
  // the two published encodings of 7
  CHECK(SDNumber::parse("10T1").value() == 7);
  CHECK(SDNumber::parse("100T").value() == 7);
  CHECK(SDNumber::from_integer(7, 4).value() == 7);
  CHECK(SDNumber::from_integer(7, 4) == SDNumber::parse("0111"));
  CHECK(SDNumber::from_integer(-7, 4) == SDNumber::parse("0TTT"));
  CHECK(SDNumber::from_integer(0, 4) == SDNumber::zero(4));
  CHECK(SDNumber::zero(8).value() == 0);

  CHECK_THROWS_AS(SDNumber::from_integer(16, 4), Overflow);
  CHECK_THROWS_AS(SDNumber::from_integer(-16, 4), Overflow);
  CHECK(SDNumber::from_integer(15, 4).value() == 15);
  CHECK(SDNumber::from_integer(-15, 4).value() == -15);

  CHECK_THROWS_AS(SDNumber::zero(0), Overflow);
  CHECK_THROWS_AS(SDNumber::zero(513), Overflow);
  CHECK_THROWS_AS(SDNumber::parse(""), InvalidCoding);
  CHECK_THROWS_AS(SDNumber::parse("10x1"), InvalidCoding);
}

TEST_CASE("negation swaps the digit parts") {
  SDNumber x = SDNumber::parse("10T1");
  SDNumber nx = x.negated();
  CHECK(nx == SDNumber::parse("T01T"));
  CHECK(nx.value() == -7);
  CHECK(SDNumber::zero(5).negated() == SDNumber::zero(5));

  SDGenerator gen(11);
  for (int k = 0; k < 100; ++k) {
    SDNumber r = gen.next(16);
    CHECK(r.negated().negated() == r);
    CHECK(r.negated().value() == -r.value());
  }
}

TEST_CASE("positive/negative part decomposition") {
  SDNumber x = SDNumber::parse("1T01");  // digits lsb-first: 1,0,-1,1
  CHECK(x.positive_part() == std::vector<uint8_t>{1, 0, 0, 1});
  CHECK(x.negative_part() == std::vector<uint8_t>{0, 0, 1, 0});

  SDNumber ones(std::vector<Trit>(6, Trit::PlusOne));
  CHECK(ones.positive_part() == std::vector<uint8_t>(6, 1));
  CHECK(ones.negative_part() == std::vector<uint8_t>(6, 0));

  // exhaustive at width 4
  for (int code = 0; code < 81; ++code) {
    int c = code;
    std::vector<Trit> digits;
    for (int i = 0; i < 4; ++i) {
      digits.push_back(trit_from_int(c % 3 - 1));
      c /= 3;
    }
    SDNumber v{digits};
    CHECK(v.value() == value_bin(v.positive_part()) - value_bin(v.negative_part()));
  }
  // randomized at width 64
  SDGenerator gen(5);
  for (int k = 0; k < 1000; ++k) {
    SDNumber v = gen.next(64);
    CHECK(v.value() == value_bin(v.positive_part()) - value_bin(v.negative_part()));
  }
}

TEST_CASE("oracle addition") {
  CHECK(oracle_add(SDNumber::parse("1T11"), SDNumber::parse("0110")) == 13);
  CHECK(oracle_add(SDNumber::parse("00T0"), SDNumber::parse("01T0")) == 0);
  SDGenerator gen(3);
  for (int k = 0; k < 50; ++k) {
    SDNumber x = gen.next(12);
    CHECK(oracle_add(x, x.negated()) == 0);
  }
}

TEST_CASE("represents_sum agrees with exact values") {
  SDGenerator gen(17);
  for (int k = 0; k < 500; ++k) {
    SDNumber a = gen.next(10);
    SDNumber b = gen.next(10);
    SDNumber good = SDNumber::from_integer(a.value() + b.value(), 12);
    CHECK(represents_sum(a, b, good));
    SDNumber bad = SDNumber::from_integer(a.value() + b.value() + 1, 12);
    CHECK_FALSE(represents_sum(a, b, bad));
  }
  // exercises widths the Int accumulator cannot reach
  SDGenerator wide(23);
  SDNumber a = wide.next(512);
  CHECK(represents_sum(a, a.negated(), SDNumber::zero(512)));
}

TEST_CASE("literal round trip") {
  SDGenerator gen(29);
  for (int k = 0; k < 200; ++k) {
    SDNumber x = gen.next(1 + static_cast<int>(k % 40));
    CHECK(SDNumber::parse(x.to_string()) == x);
  }
  CHECK(SDNumber::parse("10T1").to_string() == "10T1");
}

TEST_CASE("random operand streams") {
  CHECK(random_sd(8, 42) == random_sd(8, 42));
  CHECK(random_sd(1, 7).width() == 1);
  CHECK(random_sd(8, 1) != random_sd(8, 2));

  // per-position frequencies stay near 1/3 over 10000 draws
  const int draws = 10000, width = 8;
  int counts[8][3] = {};
  SDGenerator gen(1234);
  for (int k = 0; k < draws; ++k) {
    SDNumber x = gen.next(width);
    for (int i = 0; i < width; ++i) ++counts[i][trit_value(x.digit(i)) + 1];
  }
  for (int i = 0; i < width; ++i)
    for (int v = 0; v < 3; ++v)
      CHECK(std::abs(counts[i][v] / double(draws) - 1.0 / 3.0) < 0.02);
}

TEST_CASE("int_to_string covers wide values") {
  CHECK(int_to_string(0) == "0");
  CHECK(int_to_string(-13) == "-13");
  SDNumber big(std::vector<Trit>(100, Trit::PlusOne));
  CHECK(int_to_string(big.value()) == "1267650600228229401496703205375");  // 2^100 - 1
  CHECK_THROWS_AS(SDNumber::zero(127).value(), Overflow);
}
