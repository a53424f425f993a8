#pragma once

#include <vector>

#include "tridend/rational.hpp"

namespace tridend {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

/// Reduced row-echelon form over the rationals. Forward elimination is
/// fraction-free on integer-scaled rows; the final normalization divides
/// each pivot row down to leading coefficient one. Zero rows are dropped.
/// Returns the nonzero rows in pivot order together with the pivot columns.
struct Echelon {
  RationalMatrix rows;
  std::vector<int> pivots;
};

Echelon rref(RationalMatrix m);

/// Basis of { x : m x = 0 }, one vector per free column, in column order.
/// Each basis vector has entry one at its free column.
RationalMatrix null_space(const RationalMatrix& m, int cols);

int rank(RationalMatrix m);

}  // namespace tridend
