#pragma once

#include <span>
#include <vector>

#include "tridend/linalg.hpp"
#include "tridend/tree_vector.hpp"

namespace tridend {

/// Word of homogeneous vectors, the argument of the omega maps.
using TensorWord = std::vector<TreeVector>;

/// Graded bases of the primitive spaces, one list of vectors per degree
/// (index 0 unused).
struct GradedPrimitiveBasis {
  std::vector<std::vector<TreeVector>> by_degree;

  int max_degree() const { return static_cast<int>(by_degree.size()) - 1; }
  const std::vector<TreeVector>& at(int n) const { return by_degree[static_cast<std::size_t>(n)]; }
  std::vector<int> dimensions() const;
};

/// x . Y, the degree-raising isomorphism onto the codendriform primitives.
TreeVector theta(const TreeVector& x);

/// omega_prec(x_1 ... x_k) = x_1 prec omega_prec(x_2 ... x_k), empty word ->
/// unit; omega_succeq folds from the left with succeq.
TreeVector omega_prec(std::span<const TreeVector> word);
TreeVector omega_succeq(std::span<const TreeVector> word);

/// The alternating brace expression
///   omega(x_1...x_k, y) = sum_i (-1)^(k-i)
///       omega_prec(x_1..x_i) succeq y prec omega_succeq(x_(i+1)..x_k),
/// omega(x) = x.  Mixed chains associate as (a succeq y) prec b.
TreeVector omega(std::span<const TreeVector> word);

/// All compositions of n into positive parts, ordered by length then
/// lexicographically.
std::vector<std::vector<int>> compositions(int n);

/// Candidates spanning the degree-n primitives: theta of the degree-(n-1)
/// basis, plus omega of every word of lower-degree basis vectors over each
/// composition of length >= 2. Deduplicated, deterministic order.
std::vector<TreeVector> generate_candidates(int n, const GradedPrimitiveBasis& lower);

/// Reduced row-echelon basis of the candidate span, columns indexed by
/// enumerate_trees(n).
std::vector<TreeVector> extract_basis(const std::vector<TreeVector>& candidates, int n);

/// Independent oracle: exact kernel basis of the reduced coproduct on the
/// degree-n component.
std::vector<TreeVector> kernel_oracle(int n);

/// Run the induction up to max_degree, verifying every produced vector is
/// primitive. Throws verify_error on any failure.
GradedPrimitiveBasis pipeline(int max_degree);

/// Row form of a vector over the degree-n tree basis (helper shared with the
/// span-comparison tests and the CLI verifier).
RationalRow vector_to_row(const TreeVector& v, int degree);
TreeVector row_to_vector(const RationalRow& row, int degree);

/// Exact span equality via identical reduced row-echelon forms.
bool same_span(const std::vector<TreeVector>& a, const std::vector<TreeVector>& b, int degree);

}  // namespace tridend
