#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tridend/tree_code.hpp"
#include "tridend/tree_vector.hpp"

namespace tridend {

/// Contiguous range of angle indices removed by one cut.
struct SingleCut {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const SingleCut&, const SingleCut&) = default;
  friend bool operator<(const SingleCut& a, const SingleCut& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }
};

/// Strictly increasing sequence of pairwise disjoint cuts; empty = the empty
/// cut, the full interval = the total cut.
using Pruning = std::vector<SingleCut>;

/// All single cuts of t, one per level, deduplicated and sorted by left end.
/// The unit tree has none; a corolla has only the total cut.
std::vector<SingleCut> single_cuts(const TreeCode& t);

/// Visit every admissible pruning exactly once, starting from the empty one.
void enumerate_prunings(const TreeCode& t, const std::function<void(const Pruning&)>& visit);

/// Cut-off pieces (left to right) and the component containing the root,
/// via column restriction with duplicate-row collapse.
std::pair<std::vector<TreeCode>, TreeCode> apply_pruning(const TreeCode& t, const Pruning& p);

/// Delta(t) = sum over prunings of (P_1 * ... * P_k) tensor R.
TensorVector coproduct(const TreeCode& t);
TensorVector coproduct(const TreeVector& x);

/// Delta(x) - x tensor unit - unit tensor x; x must be homogeneous of
/// degree >= 1.
TensorVector reduced_coproduct(const TreeVector& x);

bool is_primitive(const TreeVector& x);

}  // namespace tridend
