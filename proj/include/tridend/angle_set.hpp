#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "tridend/errors.hpp"

namespace tridend {

/// Hard capacity: angles live in [1..64] so a chain row fits one machine word.
inline constexpr int kCapacity = 64;

/// Subset of [1..kCapacity] in one-hot form: member i sets bit i-1, so the
/// stored word is the canonical integer encoding of the set.
class AngleSet {
 public:
  constexpr AngleSet() = default;

  static constexpr AngleSet from_bits(std::uint64_t bits) { return AngleSet(bits); }

  static AngleSet single(int i) {
    check_index(i);
    return AngleSet(std::uint64_t{1} << (i - 1));
  }

  /// Interval [lo..hi]; empty when lo > hi.
  static AngleSet range(int lo, int hi) {
    if (lo > hi) return AngleSet();
    check_index(lo);
    check_index(hi);
    std::uint64_t hi_mask = (hi == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
    std::uint64_t lo_mask = (std::uint64_t{1} << (lo - 1)) - 1;
    return AngleSet(hi_mask & ~lo_mask);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int i) const {
    return i >= 1 && i <= kCapacity && (bits_ >> (i - 1)) & 1;
  }

  /// Smallest / largest member; the set must be nonempty.
  int min() const { return std::countr_zero(bits_) + 1; }
  int max() const { return kCapacity - std::countl_zero(bits_); }

  /// Every member moved up by offset (offset >= 0). Overflowing the capacity
  /// is a hard error, never silent truncation.
  AngleSet shifted(int offset) const {
    if (bits_ == 0 || offset == 0) return AngleSet(bits_ << offset);
    if (max() + offset > kCapacity)
      throw capacity_error("angle set shift exceeds capacity of 64 angles");
    return AngleSet(bits_ << offset);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr AngleSet operator|(AngleSet a, AngleSet b) { return AngleSet(a.bits_ | b.bits_); }
  friend constexpr AngleSet operator&(AngleSet a, AngleSet b) { return AngleSet(a.bits_ & b.bits_); }
  friend constexpr AngleSet operator-(AngleSet a, AngleSet b) { return AngleSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(AngleSet a, AngleSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(AngleSet a, AngleSet b) { return a.bits_ != b.bits_; }

 private:
  explicit constexpr AngleSet(std::uint64_t bits) : bits_(bits) {}

  static void check_index(int i) {
    if (i < 1 || i > kCapacity)
      throw capacity_error("angle index outside [1..64]");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace tridend
