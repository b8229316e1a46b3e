// Finite binary words. Letter i of the word is stored at bit i of the limb
// array, so concatenation of packed words is u | (v << |u|).
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ulam {

class Word {
 public:
  Word() = default;

  static Word from_string(std::string_view bits);
  // 0^m 1 0^n
  static Word one_one(std::uint64_t m, std::uint64_t n);
  // w(x,y,z) = 0^x 1 0^y 1 0^z
  static Word two_ones(std::uint64_t x, std::uint64_t y, std::uint64_t z);
  static Word from_packed(std::uint64_t bits, int length);

  int length() const { return len_; }
  bool bit(int i) const {
    return (limbs_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }
  // Low 64 bits; the full word when length() <= 64.
  std::uint64_t packed() const { return limbs_.empty() ? 0 : limbs_[0]; }
  const std::vector<std::uint64_t>& limbs() const { return limbs_; }
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  int len_ = 0;
  std::vector<std::uint64_t> limbs_;
};

}  // namespace ulam
