#include "ulam/word.hpp"

#include <limits>
#include <stdexcept>

namespace ulam {

namespace {

constexpr int kMaxWordLength = 1 << 24;

void set_bit(std::vector<std::uint64_t>& limbs, std::uint64_t i) {
  limbs[i >> 6] |= std::uint64_t{1} << (i & 63);
}

int checked_length(std::uint64_t n) {
  if (n > kMaxWordLength) throw std::length_error("Word: length too large");
  return static_cast<int>(n);
}

}  // namespace

Word Word::from_string(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("Word: empty string");
  Word w;
  w.len_ = checked_length(bits.size());
  w.limbs_.assign((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      set_bit(w.limbs_, i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("Word: characters must be 0 or 1");
    }
  }
  return w;
}

Word Word::one_one(std::uint64_t m, std::uint64_t n) {
  Word w;
  w.len_ = checked_length(m + n + 1);
  w.limbs_.assign((static_cast<std::uint64_t>(w.len_) + 63) / 64, 0);
  set_bit(w.limbs_, m);
  return w;
}

Word Word::two_ones(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  Word w;
  w.len_ = checked_length(x + y + z + 2);
  w.limbs_.assign((static_cast<std::uint64_t>(w.len_) + 63) / 64, 0);
  set_bit(w.limbs_, x);
  set_bit(w.limbs_, x + y + 1);
  return w;
}

Word Word::from_packed(std::uint64_t bits, int length) {
  if (length < 1 || length > 64)
    throw std::invalid_argument("Word::from_packed: length must be in [1,64]");
  Word w;
  w.len_ = length;
  if (length < 64) bits &= (std::uint64_t{1} << length) - 1;
  w.limbs_.assign(1, bits);
  return w;
}

std::string Word::to_string() const {
  std::string s(static_cast<std::size_t>(len_), '0');
  for (int i = 0; i < len_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace ulam
