#pragma once

#include <vector>

#include "tridend/quasi_shuffle.hpp"
#include "tridend/tree_code.hpp"
#include "tridend/tree_vector.hpp"

namespace tridend {

/// The three partial products, the two half-sums and the full associative
/// product, each a union of shuffle families.
enum class Op { Prec, Mid, Succ, Preceq, Succeq, Star };

FamilySet op_families(Op op);

/// Rows level..height of t restricted to columns [a_left..a_right] and
/// shifted to start at column 1, consecutive duplicate rows collapsed.
/// The empty window a_left == a_right + 1 gives the unit forest.
ForestCode get_forest(const TreeCode& t, int level, int a_left, int a_right);

/// Comb decompositions, ordered from the root toward the leftmost
/// (resp. rightmost) leaf. Empty for the unit tree.
std::vector<ForestCode> left_comb(const TreeCode& t);
std::vector<ForestCode> right_comb(const TreeCode& t);

/// Number of internal vertices on the rightmost / leftmost branch.
int rtl(const TreeCode& t);
int ltl(const TreeCode& t);

/// The tree sigma(t, s): graft the right-comb forests of t as left sons and
/// the left-comb forests of s as right sons onto a ladder according to sigma.
/// sigma must have type (rtl(t), ltl(s)); unit arguments need the matching
/// empty-block shuffle and return the other tree.
TreeCode atomic_product(const TreeCode& t, const TreeCode& s, const QuasiShuffle& sigma);

/// Product of two basis trees. Unit conventions: x prec unit = x,
/// unit succ x = x, every other partial product with a unit vanishes;
/// star(unit, unit) = unit.
TreeVector tree_product(const TreeCode& t, const TreeCode& s, Op op);

/// Bilinear extension to sparse vectors.
TreeVector product(const TreeVector& x, const TreeVector& y, Op op);

}  // namespace tridend
