#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tridend/rational.hpp"
#include "tridend/tree_code.hpp"

namespace tridend {

struct TreeHash {
  std::size_t operator()(const TreeCode& t) const { return static_cast<std::size_t>(hash_tree(t)); }
};

struct TreePairHash {
  std::size_t operator()(const std::pair<TreeCode, TreeCode>& p) const {
    return static_cast<std::size_t>(hash_pair(p.first, p.second));
  }
};

/// Finite-support linear combination of tree codes over the rationals.
/// Sparse map keyed by the tree hash; colliding keys fall back to full code
/// comparison. Zero coefficients are never stored.
class TreeVector {
 public:
  using Terms = std::unordered_map<TreeCode, Rational, TreeHash>;

  TreeVector() = default;
  explicit TreeVector(const TreeCode& t) { terms_.emplace(t, 1); }
  TreeVector(const TreeCode& t, Rational c) {
    if (c != 0) terms_.emplace(t, std::move(c));
  }

  static TreeVector zero() { return TreeVector(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  // rvalues hand the map over so iterating a temporary's terms stays valid
  Terms terms() && { return std::move(terms_); }

  Rational coeff(const TreeCode& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const TreeCode& t, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const TreeVector& other, const Rational& scale = Rational(1)) {
    if (scale == 0) return;
    for (const auto& [t, c] : other.terms_) add(t, c * scale);
  }

  TreeVector scaled(const Rational& s) const {
    TreeVector out;
    if (s == 0) return out;
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, c * s);
    return out;
  }

  friend TreeVector operator+(const TreeVector& a, const TreeVector& b) {
    TreeVector out = a;
    out.add(b);
    return out;
  }
  friend TreeVector operator-(const TreeVector& a, const TreeVector& b) {
    TreeVector out = a;
    out.add(b, Rational(-1));
    return out;
  }
  friend bool operator==(const TreeVector& a, const TreeVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [t, c] : a.terms_) {
      auto it = b.terms_.find(t);
      if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
  }
  friend bool operator!=(const TreeVector& a, const TreeVector& b) { return !(a == b); }

  /// Common degree of all terms, if the vector is homogeneous (the zero
  /// vector is vacuously homogeneous of no particular degree).
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [t, c] : terms_) {
      if (!deg)
        deg = t.angles();
      else if (*deg != t.angles())
        return std::nullopt;
    }
    return deg;
  }

  /// Terms sorted in the canonical tree order, for printing and hashing.
  std::vector<std::pair<TreeCode, Rational>> sorted_terms() const;

 private:
  Terms terms_;
};

/// Finite-support combination of ordered tree pairs; element of the tensor
/// square.
class TensorVector {
 public:
  using Key = std::pair<TreeCode, TreeCode>;
  using Terms = std::unordered_map<Key, Rational, TreePairHash>;

  TensorVector() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }

  void add(const TreeCode& a, const TreeCode& b, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key(a, b), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const TensorVector& other, const Rational& scale = Rational(1)) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) {
      auto [it, fresh] = terms_.emplace(k, c * scale);
      if (!fresh) {
        it->second += c * scale;
        if (it->second == 0) terms_.erase(it);
      }
    }
  }

  Rational coeff(const TreeCode& a, const TreeCode& b) const {
    auto it = terms_.find(Key(a, b));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
      auto it = b.terms_.find(k);
      if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
  }
  friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

  std::vector<std::pair<Key, Rational>> sorted_terms() const;

 private:
  Terms terms_;
};

}  // namespace tridend
