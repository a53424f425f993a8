#include "tridend/products.hpp"

#include <stdexcept>

#include "tridend/errors.hpp"

namespace tridend {

FamilySet op_families(Op op) {
  switch (op) {
    case Op::Prec:   return {true, false, false};
    case Op::Mid:    return {false, true, false};
    case Op::Succ:   return {false, false, true};
    case Op::Preceq: return {true, true, false};
    case Op::Succeq: return {false, true, true};
    case Op::Star:   return FamilySet::all();
  }
  return {};
}

ForestCode get_forest(const TreeCode& t, int level, int a_left, int a_right) {
  if (level < 0 || level > t.height())
    throw std::out_of_range("forest level outside the chain");
  if (a_left < 1 || a_right > t.angles() || a_left > a_right + 1)
    throw std::out_of_range("forest angle window out of range");

  const AngleSet window = AngleSet::range(a_left, a_right);
  ForestCode f;
  f.n_angles = window.size();
  f.rows.clear();
  for (int j = level; j <= t.height(); ++j) {
    // restrict and shift down so the window starts at column 1
    AngleSet x = window.empty()
                     ? AngleSet{}
                     : AngleSet::from_bits((t.row(j) & window).bits() >> (a_left - 1));
    if (f.rows.empty() || x != f.rows.back()) f.rows.push_back(x);
  }
  return f;
}

std::vector<ForestCode> left_comb(const TreeCode& t) {
  std::vector<ForestCode> out;
  AngleSet a = AngleSet::range(1, t.angles());
  for (int l = 1; l <= t.height(); ++l) {
    AngleSet x = t.row(l) & a;
    if (x.empty()) continue;
    out.push_back(get_forest(t, l, x.min() + 1, a.max()));
    a = AngleSet::range(1, x.min() - 1);
  }
  return out;
}

std::vector<ForestCode> right_comb(const TreeCode& t) {
  std::vector<ForestCode> out;
  AngleSet a = AngleSet::range(1, t.angles());
  for (int l = 1; l <= t.height(); ++l) {
    AngleSet x = t.row(l) & a;
    if (x.empty()) continue;
    out.push_back(get_forest(t, l, a.min(), x.max() - 1));
    a = AngleSet::range(x.max() + 1, t.angles());
  }
  return out;
}

int rtl(const TreeCode& t) { return static_cast<int>(right_comb(t).size()); }
int ltl(const TreeCode& t) { return static_cast<int>(left_comb(t).size()); }

TreeCode atomic_product(const TreeCode& t, const TreeCode& s, const QuasiShuffle& sigma) {
  if (s.is_unit()) {
    if (sigma.l != 0) throw std::invalid_argument("shuffle type does not match the unit factor");
    return t;
  }
  if (t.is_unit()) {
    if (sigma.k != 0) throw std::invalid_argument("shuffle type does not match the unit factor");
    return s;
  }
  if (t.angles() + s.angles() > kCapacity)
    throw capacity_error("product exceeds capacity of 64 angles");

  const std::vector<ForestCode> right_forests = left_comb(s);
  const int k = rtl(t);
  const int l = static_cast<int>(right_forests.size());
  if (sigma.k != k || sigma.l != l)
    throw std::invalid_argument("shuffle type (" + std::to_string(sigma.k) + "," +
                                std::to_string(sigma.l) + ") does not match tree lengths (" +
                                std::to_string(k) + "," + std::to_string(l) + ")");
  const int r = sigma.r;

  // Read both grids bottom-up. h_t / h_s point at the last consumed row of t
  // and s; every produced row is the union of the current t row and the
  // current s row shifted past t's columns.
  int h_t = 0, h_s = 0;
  int f_l = 1, f_r = 1;
  std::vector<AngleSet> chain;
  chain.reserve(static_cast<std::size_t>(t.height() + s.height() + r - k - l) + 1);
  chain.push_back(AngleSet{});
  auto emit = [&] { chain.push_back(t.row(h_t) | s.row(h_s).shifted(t.angles())); };

  for (int node = 1; node <= r; ++node) {
    if (sigma.at(k + f_r) != node) {
      // left grafting only: consume the next branch row of t
      ++h_t;
      f_l = std::min(f_l + 1, k);
      emit();
    } else {
      if (sigma.at(f_l) == node) {
        // merged node: the t row advances but is written fused with s rows
        ++h_t;
        f_l = std::min(f_l + 1, k);
      }
      for (int j = 0; j <= right_forests[static_cast<std::size_t>(f_r - 1)].height(); ++j) {
        ++h_s;
        emit();
      }
      f_r = std::min(f_r + 1, l);
    }
  }
  while (h_t < t.height()) {  // rows of t above its rightmost branch
    ++h_t;
    emit();
  }
  return TreeCode::from_chain_unchecked(t.angles() + s.angles(), std::move(chain));
}

TreeVector tree_product(const TreeCode& t, const TreeCode& s, Op op) {
  const bool tu = t.is_unit();
  const bool su = s.is_unit();
  if (tu || su) {
    if (tu && su) {
      // star keeps its adjoined unit; the partial products of two units
      // vanish, which keeps all seven axioms total on unit-mixed triples
      return op == Op::Star ? TreeVector(TreeCode()) : TreeVector();
    }
    switch (op) {
      case Op::Star:   return TreeVector(tu ? s : t);
      case Op::Prec:   return tu ? TreeVector() : TreeVector(t);
      case Op::Succ:   return tu ? TreeVector(s) : TreeVector();
      case Op::Mid:    return TreeVector();
      case Op::Preceq: return tu ? TreeVector() : TreeVector(t);
      case Op::Succeq: return tu ? TreeVector(s) : TreeVector();
    }
  }
  const FamilySet fams = op_families(op);
  TreeVector out;
  for (const QuasiShuffle& sigma : enumerate_shuffles(rtl(t), ltl(s)))
    if (fams.has(sigma.family())) out.add(atomic_product(t, s, sigma), Rational(1));
  return out;
}

TreeVector product(const TreeVector& x, const TreeVector& y, Op op) {
  TreeVector out;
  for (const auto& [t, a] : x.terms())
    for (const auto& [s, b] : y.terms()) out.add(tree_product(t, s, op), a * b);
  return out;
}

}  // namespace tridend
