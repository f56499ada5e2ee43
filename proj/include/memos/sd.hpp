#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memos/errors.hpp"
#include "memos/rng.hpp"

namespace memos {

// Exact integer type for digit values. Wide enough for every width the
// evaluation protocols use; value() refuses widths it cannot represent.
using Int = __int128;

std::string int_to_string(Int v);

// Balanced ternary digit.
enum class Trit : int8_t { MinusOne = -1, Zero = 0, PlusOne = 1 };

inline int trit_value(Trit t) { return static_cast<int>(t); }
Trit trit_from_int(int v);  // throws InvalidCoding outside {-1,0,1}

// Two-bit (negative, positive) digit coding. (1,1) is not a digit.
struct NPPair {
  bool n = false;
  bool p = false;
  bool operator==(const NPPair&) const = default;
};

NPPair encode_trit(Trit t);
Trit decode_np(NPPair c);  // throws InvalidCoding for (1,1)

// Signed-digit number to base 2, digit set {-1,0,+1}. Index 0 is the least
// significant digit; the textual form is msb-first over {'1','0','T'},
// 'T' meaning -1 (e.g. "10T1" has value 7). Immutable after construction.
class SDNumber {
 public:
  static constexpr int kMaxWidth = 512;
  // widest number whose value fits the Int accumulator
  static constexpr int kMaxValueWidth = 126;

  explicit SDNumber(std::vector<Trit> digits_lsb_first);

  static SDNumber zero(int width);
  static SDNumber from_integer(Int value, int width);  // throws Overflow
  static SDNumber parse(std::string_view text);        // msb-first literal

  int width() const { return static_cast<int>(digits_.size()); }
  Trit digit(int i) const { return digits_[static_cast<size_t>(i)]; }
  const std::vector<Trit>& digits() const { return digits_; }

  Int value() const;  // throws Overflow when width > kMaxValueWidth
  SDNumber negated() const;

  // x = positive_part - negative_part, digit by digit (the p and n bit planes)
  std::vector<uint8_t> positive_part() const;
  std::vector<uint8_t> negative_part() const;

  std::string to_string() const;  // msb-first

  bool operator==(const SDNumber&) const = default;

 private:
  std::vector<Trit> digits_;
};

Int value_bin(const std::vector<uint8_t>& bits);

// Integer ground truth for all adder equivalence checks.
Int oracle_add(const SDNumber& a, const SDNumber& b);

// Exact test for value(a) + value(b) == value(out) at any width, without a
// wide accumulator: folds the digitwise difference lsb-first and checks that
// no odd residue and no final carry remain.
bool represents_sum(const SDNumber& a, const SDNumber& b, const SDNumber& out);

// Deterministic uniform trit stream (splitmix64 + rejection sampling).
class SDGenerator {
 public:
  explicit SDGenerator(uint64_t seed) : rng_(seed) {}
  Trit next_trit();
  SDNumber next(int width);
  std::pair<SDNumber, SDNumber> next_pair(int width);

 private:
  Splitmix64 rng_;
  uint64_t buffer_ = 0;
  int bits_left_ = 0;
};

SDNumber random_sd(int width, uint64_t seed);

}  // namespace memos
