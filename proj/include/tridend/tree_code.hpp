#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tridend/angle_set.hpp"

namespace tridend {

/// Letters of a packed word, 1-based values, entry i-1 belongs to angle i.
using PackedWord = std::vector<int>;

/// Canonical code of a Schroeder tree: the initial chain C_0 c C_1 c ... c C_h
/// of angle sets, C_0 empty and C_h = [1..n].  Row i records which angles are
/// alive at level i; each level adds the angles of exactly one internal
/// vertex.  The unit tree (a single leaf) is the degenerate code with no
/// angles and the one-row chain (empty).
class TreeCode {
 public:
  /// The unit tree.
  TreeCode() : angles_(0), chain_(1) {}

  /// Build from a raw chain, checking the full invariant set including
  /// canonicity (membership in the image of the code map).
  static TreeCode from_chain(int n_angles, std::vector<AngleSet> chain);

  /// Trusted constructor for values produced by the algebra itself.
  static TreeCode from_chain_unchecked(int n_angles, std::vector<AngleSet> chain) {
    TreeCode t;
    t.angles_ = n_angles;
    t.chain_ = std::move(chain);
    return t;
  }

  int angles() const { return angles_; }
  int height() const { return static_cast<int>(chain_.size()) - 1; }
  bool is_unit() const { return angles_ == 0 && chain_.size() == 1; }

  const AngleSet& row(int i) const { return chain_[static_cast<std::size_t>(i)]; }
  const std::vector<AngleSet>& chain() const { return chain_; }

  friend bool operator==(const TreeCode& a, const TreeCode& b) {
    return a.angles_ == b.angles_ && a.chain_ == b.chain_;
  }
  friend bool operator!=(const TreeCode& a, const TreeCode& b) { return !(a == b); }

 private:
  int angles_;
  std::vector<AngleSet> chain_;
};

/// A tree code with its bottom rows cut away: the rows of some tree code from
/// a given level up, restricted to a column window.  The unit forest is the
/// single empty row over zero columns.
struct ForestCode {
  int n_angles = 0;
  std::vector<AngleSet> rows{AngleSet{}};

  int height() const { return static_cast<int>(rows.size()) - 1; }

  friend bool operator==(const ForestCode&, const ForestCode&) = default;
};

struct Validity {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// The tree with one internal vertex and m+1 leaves: chain (empty, [1..m]).
TreeCode corolla(int m);

/// Graft k >= 2 subtrees onto a fresh root, producing the canonical code
/// directly: the root takes level 1, the rightmost subtree is shifted up by
/// one level and each remaining subtree is stacked above the running maximum,
/// right to left.
TreeCode vee(std::span<const TreeCode> subtrees);
TreeCode vee(std::initializer_list<TreeCode> subtrees);

/// Level of each angle (index of the chain row where it first appears),
/// 1-based, listed left to right.
std::vector<int> angle_levels(const TreeCode& t);

/// Letter of angle d is height - level(d) + 1, so root angles carry the
/// maximal letter.
PackedWord packed_word(const TreeCode& t);

/// Inverse of packed_word on left-priority packed words.  Throws parse_error
/// naming the failing position otherwise.
TreeCode code_from_packed_word(const PackedWord& w);

/// Chain invariants plus the left-priority grammar check (canonicity).
Validity is_valid_code(int n_angles, const std::vector<AngleSet>& chain);
Validity is_valid_code(const TreeCode& t);

/// Rows restricted to the given columns (in order), renumbered from 1, with
/// consecutive duplicate rows collapsed. Restricting to the angle interval of
/// a subtree or a cut yields that component's canonical code.
TreeCode restrict_to_columns(const TreeCode& t, const std::vector<int>& cols);

/// All trees with n angles, deterministically ordered by packed word
/// (lexicographic).  Memoized; the returned reference stays valid.
const std::vector<TreeCode>& enumerate_trees(int n);

/// Total order used everywhere: degree first, then packed word.
bool tree_less(const TreeCode& a, const TreeCode& b);

std::uint64_t hash_tree(const TreeCode& t);
std::uint64_t hash_pair(const TreeCode& t1, const TreeCode& t2);

/// Text grid, one row per chain element, top row C_h, bottom row C_0,
/// '#' for a live angle and '.' otherwise.  The unit tree renders as a single
/// empty line.
std::string render_grid(const TreeCode& t);
TreeCode parse_grid(const std::string& text);

}  // namespace tridend
