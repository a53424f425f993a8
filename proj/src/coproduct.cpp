#include "tridend/coproduct.hpp"

#include <algorithm>
#include <stdexcept>

#include "tridend/products.hpp"

namespace tridend {

std::vector<SingleCut> single_cuts(const TreeCode& t) {
  const PackedWord w = packed_word(t);
  const int n = t.angles();
  std::vector<SingleCut> cuts;
  if (n == 0) return cuts;
  const int m = t.height();
  for (int level = 1; level <= m; ++level) {
    int lo = 0, hi = 0;
    for (int i = 1; i <= n; ++i) {
      if (w[static_cast<std::size_t>(i - 1)] == level) {
        if (lo == 0) lo = i;
        hi = i;
      }
    }
    // widen over strictly smaller letters on both sides
    while (lo > 1 && w[static_cast<std::size_t>(lo - 2)] < level) --lo;
    while (hi < n && w[static_cast<std::size_t>(hi)] < level) ++hi;
    SingleCut c{lo, hi};
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

void enumerate_prunings(const TreeCode& t, const std::function<void(const Pruning&)>& visit) {
  const std::vector<SingleCut> cuts = single_cuts(t);
  std::vector<Pruning> stack;
  stack.push_back({});
  while (!stack.empty()) {
    Pruning p = std::move(stack.back());
    stack.pop_back();
    visit(p);
    for (const SingleCut& c : cuts) {
      if (p.empty() || p.back().hi < c.lo) {
        Pruning next = p;
        next.push_back(c);
        stack.push_back(std::move(next));
      }
    }
  }
}

std::pair<std::vector<TreeCode>, TreeCode> apply_pruning(const TreeCode& t, const Pruning& p) {
  std::vector<bool> cut(static_cast<std::size_t>(t.angles()) + 1, false);
  int last_hi = 0;
  for (const SingleCut& c : p) {
    if (c.lo < 1 || c.hi > t.angles() || c.lo > c.hi)
      throw std::invalid_argument("cut interval outside the tree");
    if (c.lo <= last_hi) throw std::invalid_argument("overlapping or unordered cuts");
    last_hi = c.hi;
    for (int i = c.lo; i <= c.hi; ++i) cut[static_cast<std::size_t>(i)] = true;
  }

  std::vector<TreeCode> pieces;
  pieces.reserve(p.size());
  for (const SingleCut& c : p) {
    std::vector<int> cols;
    for (int i = c.lo; i <= c.hi; ++i) cols.push_back(i);
    pieces.push_back(restrict_to_columns(t, cols));
  }
  std::vector<int> rest;
  for (int i = 1; i <= t.angles(); ++i)
    if (!cut[static_cast<std::size_t>(i)]) rest.push_back(i);
  return {std::move(pieces), restrict_to_columns(t, rest)};
}

TensorVector coproduct(const TreeCode& t) {
  TensorVector out;
  enumerate_prunings(t, [&](const Pruning& p) {
    auto [pieces, root] = apply_pruning(t, p);
    TreeVector left(TreeCode{});
    for (const TreeCode& piece : pieces)
      left = product(left, TreeVector(piece), Op::Star);
    for (const auto& [a, c] : left.terms()) out.add(a, root, c);
  });
  return out;
}

TensorVector coproduct(const TreeVector& x) {
  TensorVector out;
  for (const auto& [t, c] : x.terms()) out.add(coproduct(t), c);
  return out;
}

TensorVector reduced_coproduct(const TreeVector& x) {
  auto deg = x.homogeneous_degree();
  if (!deg || *deg < 1)
    throw std::invalid_argument("reduced coproduct needs a homogeneous vector of degree >= 1");
  TensorVector out = coproduct(x);
  const TreeCode unit;
  for (const auto& [t, c] : x.terms()) {
    out.add(t, unit, -c);
    out.add(unit, t, -c);
  }
  return out;
}

bool is_primitive(const TreeVector& x) { return reduced_coproduct(x).is_zero(); }

}  // namespace tridend
