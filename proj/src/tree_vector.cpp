#include "tridend/tree_vector.hpp"

#include <algorithm>

namespace tridend {

std::vector<std::pair<TreeCode, Rational>> TreeVector::sorted_terms() const {
  std::vector<std::pair<TreeCode, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return tree_less(a.first, b.first); });
  return out;
}

std::vector<std::pair<TensorVector::Key, Rational>> TensorVector::sorted_terms() const {
  std::vector<std::pair<Key, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return tree_less(a.first.first, b.first.first);
    return tree_less(a.first.second, b.first.second);
  });
  return out;
}

}  // namespace tridend
