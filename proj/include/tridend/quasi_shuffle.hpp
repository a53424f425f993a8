#pragma once

#include <vector>

#include <gmpxx.h>

namespace tridend {

/// Which of the three grafting families a shuffle falls into, read off from
/// the preimage of 1: {1} -> L (left product), {1,k+1} -> M (middle),
/// {k+1} -> R (right).
enum class Family { L, M, R };

struct FamilySet {
  bool l = false, m = false, r = false;

  static constexpr FamilySet all() { return {true, true, true}; }
  bool has(Family f) const {
    switch (f) {
      case Family::L: return l;
      case Family::M: return m;
      case Family::R: return r;
    }
    return false;
  }
};

/// A (k,l)-quasi-shuffle: a surjection [1..k+l] onto [1..r], strictly
/// increasing on positions [1..k] and on positions [k+1..k+l]. Values with a
/// two-element preimage are merges.
struct QuasiShuffle {
  int k = 0;
  int l = 0;
  int r = 0;
  std::vector<int> values;  // values[i-1] = sigma(i)

  int at(int pos) const { return values[static_cast<std::size_t>(pos - 1)]; }
  Family family() const;

  friend bool operator==(const QuasiShuffle&, const QuasiShuffle&) = default;
};

/// All (k,l)-quasi-shuffles, family order L, M, R, recursion order within a
/// family. Memoized; the reference stays valid.
const std::vector<QuasiShuffle>& enumerate_shuffles(int k, int l);

/// The requested families only, in L, M, R order. Requires k, l >= 1.
std::vector<QuasiShuffle> enumerate_family(int k, int l, FamilySet families);

/// |Batc(k,l)|, the Delannoy number D(k,l).
mpz_class count_shuffles(int k, int l);

}  // namespace tridend
