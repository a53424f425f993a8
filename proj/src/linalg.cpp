#include "tridend/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tridend {

namespace {

using IntRow = std::vector<mpz_class>;

// Clear denominators and divide out the content, keeping entries small.
IntRow scale_to_integers(const RationalRow& row) {
  mpz_class lcm = 1;
  for (const Rational& x : row)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  IntRow out(row.size());
  mpz_class gcd = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    mpz_class v = row[j].get_num() * (lcm / row[j].get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    out[j] = std::move(v);
  }
  if (gcd > 1)
    for (mpz_class& v : out) v /= gcd;
  return out;
}

}  // namespace

Echelon rref(RationalMatrix m) {
  std::vector<IntRow> rows;
  rows.reserve(m.size());
  std::size_t cols = 0;
  for (const RationalRow& r : m) cols = std::max(cols, r.size());
  for (const RationalRow& r : m) {
    IntRow ir = scale_to_integers(r);
    ir.resize(cols);
    bool nonzero = false;
    for (const mpz_class& v : ir)
      if (v != 0) { nonzero = true; break; }
    if (nonzero) rows.push_back(std::move(ir));
  }

  // Fraction-free (Bareiss) forward elimination with first-nonzero pivoting.
  std::vector<int> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);  // rows below the last pivot are now zero

  // Back-substitution over the rationals to reach the canonical reduced form.
  RationalMatrix red(r, RationalRow(cols, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) red[i][j] = Rational(rows[i][j]);
  for (std::size_t i = r; i-- > 0;) {
    const int pc = pivots[i];
    Rational lead = red[i][static_cast<std::size_t>(pc)];
    for (std::size_t j = static_cast<std::size_t>(pc); j < cols; ++j) red[i][j] /= lead;
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = red[k][static_cast<std::size_t>(pc)];
      if (f == 0) continue;
      for (std::size_t j = static_cast<std::size_t>(pc); j < cols; ++j)
        red[k][j] -= f * red[i][j];
    }
  }
  return {std::move(red), std::move(pivots)};
}

RationalMatrix null_space(const RationalMatrix& m, int cols) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  RationalMatrix basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    RationalRow x(static_cast<std::size_t>(cols), Rational(0));
    x[static_cast<std::size_t>(fc)] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      x[static_cast<std::size_t>(e.pivots[i])] = -e.rows[i][static_cast<std::size_t>(fc)];
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank(RationalMatrix m) { return static_cast<int>(rref(std::move(m)).pivots.size()); }

}  // namespace tridend
