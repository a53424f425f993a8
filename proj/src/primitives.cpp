#include "tridend/primitives.hpp"

#include <map>
#include <string>
#include <unordered_set>

#include "tridend/coproduct.hpp"
#include "tridend/errors.hpp"
#include "tridend/products.hpp"
#include "tridend/serialization.hpp"

namespace tridend {

std::vector<int> GradedPrimitiveBasis::dimensions() const {
  std::vector<int> out;
  for (std::size_t n = 1; n < by_degree.size(); ++n)
    out.push_back(static_cast<int>(by_degree[n].size()));
  return out;
}

TreeVector theta(const TreeVector& x) {
  return product(x, TreeVector(corolla(1)), Op::Mid);
}

TreeVector omega_prec(std::span<const TreeVector> word) {
  if (word.empty()) return TreeVector(TreeCode{});
  return product(word.front(), omega_prec(word.subspan(1)), Op::Prec);
}

TreeVector omega_succeq(std::span<const TreeVector> word) {
  if (word.empty()) return TreeVector(TreeCode{});
  return product(omega_succeq(word.subspan(0, word.size() - 1)), word.back(), Op::Succeq);
}

TreeVector omega(std::span<const TreeVector> word) {
  if (word.empty()) throw std::invalid_argument("omega of the empty word");
  if (word.size() == 1) return word.front();
  const std::size_t k = word.size() - 1;
  const TreeVector& y = word.back();
  TreeVector out;
  for (std::size_t i = 0; i <= k; ++i) {
    TreeVector term = product(product(omega_prec(word.subspan(0, i)), y, Op::Succeq),
                              omega_succeq(word.subspan(i, k - i)), Op::Prec);
    out.add(term, ((k - i) % 2 == 0) ? Rational(1) : Rational(-1));
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int parts) -> void {
    if (parts == 0) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rem - parts + 1; ++first) {
      cur.push_back(first);
      self(self, rem - first, parts - 1);
      cur.pop_back();
    }
  };
  for (int len = 1; len <= n; ++len) rec(rec, n, len);
  return out;
}

std::vector<TreeVector> generate_candidates(int n, const GradedPrimitiveBasis& lower) {
  if (lower.max_degree() < n - 1)
    throw std::invalid_argument("candidate generation needs all lower-degree bases");
  std::vector<TreeVector> out;
  std::unordered_set<std::string> seen;
  auto push = [&](TreeVector v) {
    if (v.is_zero()) return;
    std::string key = vector_to_text(v);
    if (seen.insert(std::move(key)).second) out.push_back(std::move(v));
  };

  for (const std::vector<int>& comp : compositions(n)) {
    if (comp.size() == 1) {
      // the codendriform part of W_n, reached through theta
      if (n == 1) {
        push(TreeVector(corolla(1)));
      } else {
        for (const TreeVector& b : lower.at(n - 1)) push(theta(b));
      }
      continue;
    }
    // every word of lower-degree primitives over this composition
    std::vector<std::size_t> idx(comp.size(), 0);
    while (true) {
      TensorWord word;
      word.reserve(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i)
        word.push_back(lower.at(comp[i])[idx[i]]);
      push(omega(word));
      std::size_t i = comp.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++idx[i] < lower.at(comp[i]).size()) { done = false; break; }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

RationalRow vector_to_row(const TreeVector& v, int degree) {
  const std::vector<TreeCode>& trees = enumerate_trees(degree);
  std::map<PackedWord, std::size_t> index;
  for (std::size_t i = 0; i < trees.size(); ++i) index[packed_word(trees[i])] = i;
  RationalRow row(trees.size(), Rational(0));
  for (const auto& [t, c] : v.terms()) {
    auto it = index.find(packed_word(t));
    if (it == index.end()) throw std::invalid_argument("vector is not homogeneous of the degree");
    row[it->second] = c;
  }
  return row;
}

TreeVector row_to_vector(const RationalRow& row, int degree) {
  const std::vector<TreeCode>& trees = enumerate_trees(degree);
  TreeVector v;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) v.add(trees[i], row[i]);
  return v;
}

std::vector<TreeVector> extract_basis(const std::vector<TreeVector>& candidates, int n) {
  RationalMatrix m;
  m.reserve(candidates.size());
  for (const TreeVector& c : candidates) m.push_back(vector_to_row(c, n));
  Echelon e = rref(std::move(m));
  std::vector<TreeVector> basis;
  basis.reserve(e.rows.size());
  for (const RationalRow& row : e.rows) basis.push_back(row_to_vector(row, n));
  return basis;
}

std::vector<TreeVector> kernel_oracle(int n) {
  if (n < 1) throw std::invalid_argument("kernel oracle needs degree >= 1");
  const std::vector<TreeCode>& trees = enumerate_trees(n);

  // column index over pairs (a, b) with deg a + deg b = n, both >= 1
  std::map<std::pair<PackedWord, PackedWord>, std::size_t> pair_index;
  std::size_t pairs = 0;
  for (int a = 1; a < n; ++a)
    for (const TreeCode& ta : enumerate_trees(a))
      for (const TreeCode& tb : enumerate_trees(n - a))
        pair_index[{packed_word(ta), packed_word(tb)}] = pairs++;

  // the map x -> reduced_coproduct(x) as a (pairs x trees) matrix
  RationalMatrix m(pairs, RationalRow(trees.size(), Rational(0)));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    TensorVector d = reduced_coproduct(TreeVector(trees[i]));
    for (const auto& [key, c] : d.terms()) {
      auto it = pair_index.find({packed_word(key.first), packed_word(key.second)});
      if (it == pair_index.end()) throw verify_error("reduced coproduct term outside the grading");
      m[it->second][i] = c;
    }
  }

  RationalMatrix basis_rows = null_space(m, static_cast<int>(trees.size()));
  // canonicalize so span comparisons are plain equality
  Echelon e = rref(std::move(basis_rows));
  std::vector<TreeVector> basis;
  for (const RationalRow& row : e.rows) basis.push_back(row_to_vector(row, n));
  return basis;
}

bool same_span(const std::vector<TreeVector>& a, const std::vector<TreeVector>& b, int degree) {
  RationalMatrix ma, mb;
  for (const TreeVector& v : a) ma.push_back(vector_to_row(v, degree));
  for (const TreeVector& v : b) mb.push_back(vector_to_row(v, degree));
  return rref(std::move(ma)).rows == rref(std::move(mb)).rows;
}

GradedPrimitiveBasis pipeline(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("pipeline needs max_degree >= 1");
  GradedPrimitiveBasis out;
  out.by_degree.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<TreeVector> basis = extract_basis(generate_candidates(n, out), n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!is_primitive(basis[i]))
        throw verify_error("pipeline produced a non-primitive vector at degree " +
                           std::to_string(n) + ", index " + std::to_string(i));
    }
    out.by_degree[static_cast<std::size_t>(n)] = std::move(basis);
  }
  return out;
}

}  // namespace tridend
