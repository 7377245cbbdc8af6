// Fixed-modulus bitset of residues, used for reachable-subset-sum DP.
#pragma once

#include <cstdint>
#include <vector>

namespace ufmax {

class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(std::int64_t modulus)
      : modulus_(modulus), words_(static_cast<std::size_t>((modulus + 63) / 64), 0) {}

  std::int64_t modulus() const { return modulus_; }

  bool contains(std::int64_t r) const { return (words_[r >> 6] >> (r & 63)) & 1U; }
  void insert(std::int64_t r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }

  /// {x + shift mod m : x in *this}
  ResidueSet shifted(std::int64_t shift) const {
    ResidueSet out(modulus_);
    for (std::int64_t r = 0; r < modulus_; ++r) {
      if (contains(r)) out.insert((r + shift) % modulus_);
    }
    return out;
  }

  ResidueSet& operator|=(const ResidueSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// Adds the option of including an element with the given coefficient.
  void absorb(std::int64_t coefficient) { *this |= shifted(coefficient); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int b = __builtin_ctzll(bits);
        f(static_cast<std::int64_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::int64_t modulus_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ufmax
