#include "memos/sd.hpp"

#include <algorithm>
#include <cstdlib>

namespace memos {

std::string int_to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // careful: -INT128_MIN does not overflow here because digits cap at 126 bits
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Trit trit_from_int(int v) {
  if (v < -1 || v > 1) throw InvalidCoding("trit value outside {-1,0,1}");
  return static_cast<Trit>(v);
}

NPPair encode_trit(Trit t) {
  switch (t) {
    case Trit::MinusOne: return {true, false};
    case Trit::Zero: return {false, false};
    case Trit::PlusOne: return {false, true};
  }
  throw InvalidCoding("corrupted trit");
}

Trit decode_np(NPPair c) {
  if (c.n && c.p) throw InvalidCoding("(n,p) = (1,1) is not a digit");
  if (c.n) return Trit::MinusOne;
  if (c.p) return Trit::PlusOne;
  return Trit::Zero;
}

SDNumber::SDNumber(std::vector<Trit> digits_lsb_first) : digits_(std::move(digits_lsb_first)) {
  if (digits_.empty()) throw Overflow("width must be at least 1");
  if (width() > kMaxWidth) throw Overflow("width exceeds 512 digits");
}

SDNumber SDNumber::zero(int width) {
  if (width < 1) throw Overflow("width must be at least 1");
  return SDNumber(std::vector<Trit>(static_cast<size_t>(width), Trit::Zero));
}

SDNumber SDNumber::from_integer(Int value, int width) {
  if (width < 1 || width > kMaxWidth) throw Overflow("width out of range");
  bool neg = value < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(value + 1)) + 1
                              : static_cast<unsigned __int128>(value);
  if (width < 127) {
    unsigned __int128 limit = (static_cast<unsigned __int128>(1) << width) - 1;
    if (mag > limit) throw Overflow("magnitude does not fit the requested width");
  }
  std::vector<Trit> digits(static_cast<size_t>(width), Trit::Zero);
  for (int i = 0; i < width && mag != 0; ++i, mag >>= 1) {
    if (mag & 1) digits[static_cast<size_t>(i)] = neg ? Trit::MinusOne : Trit::PlusOne;
  }
  return SDNumber(std::move(digits));
}

SDNumber SDNumber::parse(std::string_view text) {
  if (text.empty()) throw InvalidCoding("empty literal");
  std::vector<Trit> digits;
  digits.reserve(text.size());
  // text is msb-first
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    switch (*it) {
      case '1': digits.push_back(Trit::PlusOne); break;
      case '0': digits.push_back(Trit::Zero); break;
      case 'T': digits.push_back(Trit::MinusOne); break;
      default: throw InvalidCoding(std::string("bad digit character '") + *it + "'");
    }
  }
  return SDNumber(std::move(digits));
}

Int SDNumber::value() const {
  if (width() > kMaxValueWidth) throw Overflow("value() supports widths up to 126");
  Int acc = 0;
  for (int i = width() - 1; i >= 0; --i) acc = acc * 2 + trit_value(digits_[static_cast<size_t>(i)]);
  return acc;
}

SDNumber SDNumber::negated() const {
  std::vector<Trit> digits(digits_.size());
  for (size_t i = 0; i < digits_.size(); ++i)
    digits[i] = static_cast<Trit>(-trit_value(digits_[i]));
  return SDNumber(std::move(digits));
}

std::vector<uint8_t> SDNumber::positive_part() const {
  std::vector<uint8_t> bits(digits_.size());
  for (size_t i = 0; i < digits_.size(); ++i) bits[i] = digits_[i] == Trit::PlusOne ? 1 : 0;
  return bits;
}

std::vector<uint8_t> SDNumber::negative_part() const {
  std::vector<uint8_t> bits(digits_.size());
  for (size_t i = 0; i < digits_.size(); ++i) bits[i] = digits_[i] == Trit::MinusOne ? 1 : 0;
  return bits;
}

std::string SDNumber::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (int i = width() - 1; i >= 0; --i) {
    switch (digits_[static_cast<size_t>(i)]) {
      case Trit::PlusOne: out.push_back('1'); break;
      case Trit::Zero: out.push_back('0'); break;
      case Trit::MinusOne: out.push_back('T'); break;
    }
  }
  return out;
}

Int value_bin(const std::vector<uint8_t>& bits) {
  if (bits.size() > SDNumber::kMaxValueWidth) throw Overflow("binary vector too wide");
  Int acc = 0;
  for (size_t i = bits.size(); i-- > 0;) acc = acc * 2 + (bits[i] ? 1 : 0);
  return acc;
}

Int oracle_add(const SDNumber& a, const SDNumber& b) { return a.value() + b.value(); }

bool represents_sum(const SDNumber& a, const SDNumber& b, const SDNumber& out) {
  int w = std::max({a.width(), b.width(), out.width()});
  long carry = 0;  // stays within [-3, 3]
  for (int i = 0; i < w; ++i) {
    long d = carry;
    if (i < a.width()) d += trit_value(a.digit(i));
    if (i < b.width()) d += trit_value(b.digit(i));
    if (i < out.width()) d -= trit_value(out.digit(i));
    if (d & 1) return false;  // odd residue: remaining value cannot be zero
    carry = d / 2;
  }
  return carry == 0;
}

Trit SDGenerator::next_trit() {
  for (;;) {
    if (bits_left_ < 2) {
      buffer_ = rng_.next();
      bits_left_ = 64;
    }
    int two = static_cast<int>(buffer_ & 3);
    buffer_ >>= 2;
    bits_left_ -= 2;
    if (two != 3) return static_cast<Trit>(two - 1);
  }
}

SDNumber SDGenerator::next(int width) {
  if (width < 1) throw Overflow("width must be at least 1");
  std::vector<Trit> digits(static_cast<size_t>(width));
  for (auto& d : digits) d = next_trit();
  return SDNumber(std::move(digits));
}

std::pair<SDNumber, SDNumber> SDGenerator::next_pair(int width) {
  SDNumber a = next(width);
  SDNumber b = next(width);
  return {std::move(a), std::move(b)};
}

SDNumber random_sd(int width, uint64_t seed) { return SDGenerator(seed).next(width); }

}  // namespace memos
