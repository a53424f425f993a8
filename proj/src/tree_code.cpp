#include "tridend/tree_code.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "tridend/errors.hpp"

namespace tridend {

TreeCode corolla(int m) {
  if (m < 1) throw parse_error("corolla needs at least one angle");
  if (m > kCapacity) throw capacity_error("corolla exceeds capacity of 64 angles");
  return TreeCode::from_chain_unchecked(m, {AngleSet{}, AngleSet::range(1, m)});
}

std::vector<int> angle_levels(const TreeCode& t) {
  std::vector<int> levels(static_cast<std::size_t>(t.angles()), 0);
  for (int l = 1; l <= t.height(); ++l)
    for (int a : (t.row(l) - t.row(l - 1)).elements())
      levels[static_cast<std::size_t>(a - 1)] = l;
  return levels;
}

TreeCode vee(std::span<const TreeCode> subtrees) {
  const int k = static_cast<int>(subtrees.size());
  if (k < 2) throw parse_error("vee needs at least two subtrees");

  long long total = k - 1;
  int h = 1;
  for (const TreeCode& s : subtrees) {
    total += s.angles();
    h += s.height();
  }
  if (total > kCapacity) throw capacity_error("vee result exceeds capacity of 64 angles");
  const int n = static_cast<int>(total);

  // Level shift per subtree: rightmost sits directly above the root, the
  // others stack above whatever is already placed.
  std::vector<int> shift(static_cast<std::size_t>(k));
  shift[static_cast<std::size_t>(k - 1)] = 1;
  for (int i = k - 2; i >= 0; --i)
    shift[static_cast<std::size_t>(i)] =
        shift[static_cast<std::size_t>(i + 1)] + subtrees[static_cast<std::size_t>(i + 1)].height();

  std::vector<int> levels;
  levels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) {
    for (int l : angle_levels(subtrees[static_cast<std::size_t>(i)]))
      levels.push_back(l + shift[static_cast<std::size_t>(i)]);
    if (i < k - 1) levels.push_back(1);  // angle at the root between subtrees
  }

  std::vector<AngleSet> chain(static_cast<std::size_t>(h) + 1);
  for (int a = 1; a <= n; ++a)
    for (int j = levels[static_cast<std::size_t>(a - 1)]; j <= h; ++j)
      chain[static_cast<std::size_t>(j)] = chain[static_cast<std::size_t>(j)] | AngleSet::single(a);
  return TreeCode::from_chain_unchecked(n, std::move(chain));
}

TreeCode vee(std::initializer_list<TreeCode> subtrees) {
  return vee(std::span<const TreeCode>(subtrees.begin(), subtrees.size()));
}

PackedWord packed_word(const TreeCode& t) {
  PackedWord w(static_cast<std::size_t>(t.angles()), 0);
  const int h = t.height();
  for (int l = 0; l < h; ++l)
    for (int d : (t.row(l + 1) - t.row(l)).elements())
      w[static_cast<std::size_t>(d - 1)] = h - l;
  return w;
}

namespace {

// Recursive left-priority parse.  letters is the normalized sub-word (letters
// expected to span [1..max]); pos0 is the absolute 1-based position of its
// first letter, used for diagnostics.
TreeCode parse_lppw(std::span<const int> letters, int pos0) {
  if (letters.empty()) return TreeCode();
  int m = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 1)
      throw parse_error("not a left-priority packed word at position " +
                        std::to_string(pos0 + static_cast<int>(i)));
    m = std::max(m, letters[i]);
  }

  // Split at occurrences of the maximal letter; the segments are the
  // subtree words shifted by cumulative maxima.
  std::vector<TreeCode> subs;
  int offset = 0;
  std::size_t seg_start = 0;
  for (std::size_t i = 0; i <= letters.size(); ++i) {
    if (i < letters.size() && letters[i] != m) continue;
    std::vector<int> sub;
    sub.reserve(i - seg_start);
    int sub_max = 0;
    for (std::size_t j = seg_start; j < i; ++j) {
      int v = letters[j] - offset;
      if (v < 1)
        throw parse_error("not a left-priority packed word at position " +
                          std::to_string(pos0 + static_cast<int>(j)));
      sub.push_back(v);
      sub_max = std::max(sub_max, v);
    }
    subs.push_back(parse_lppw(sub, pos0 + static_cast<int>(seg_start)));
    offset += sub_max;
    seg_start = i + 1;
  }
  if (offset + 1 != m)
    throw parse_error("not a left-priority packed word at position " +
                      std::to_string(pos0 + static_cast<int>(letters.size()) - 1) +
                      " (letters do not pack)");
  return vee(subs);
}

}  // namespace

TreeCode code_from_packed_word(const PackedWord& w) {
  return parse_lppw(std::span<const int>(w.data(), w.size()), 1);
}

Validity is_valid_code(int n_angles, const std::vector<AngleSet>& chain) {
  if (n_angles < 0 || n_angles > kCapacity)
    return {false, "angle count outside [0..64]"};
  if (chain.empty()) return {false, "chain is empty"};
  if (!chain.front().empty()) return {false, "bottom row is not empty"};
  if (chain.back() != AngleSet::range(1, n_angles) && n_angles > 0)
    return {false, "top row is not the full angle set"};
  if (n_angles == 0 && chain.size() != 1) return {false, "unit tree must have a one-row chain"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if ((chain[i] - chain[i + 1]) != AngleSet{} || chain[i] == chain[i + 1])
      return {false, "chain rows are not strictly increasing at row " + std::to_string(i + 1)};
  }
  if (n_angles > 0 && chain.back().max() > n_angles)
    return {false, "angle index above the declared count"};

  TreeCode t = TreeCode::from_chain_unchecked(n_angles, chain);
  try {
    TreeCode back = code_from_packed_word(packed_word(t));
    if (back != t) return {false, "chain is not the canonical levelling of its tree"};
  } catch (const parse_error& e) {
    return {false, e.what()};
  }
  return {};
}

Validity is_valid_code(const TreeCode& t) { return is_valid_code(t.angles(), t.chain()); }

TreeCode TreeCode::from_chain(int n_angles, std::vector<AngleSet> chain) {
  Validity v = is_valid_code(n_angles, chain);
  if (!v) throw parse_error("invalid tree code: " + v.reason);
  return from_chain_unchecked(n_angles, std::move(chain));
}

TreeCode restrict_to_columns(const TreeCode& t, const std::vector<int>& cols) {
  std::vector<AngleSet> rows;
  for (const AngleSet& row : t.chain()) {
    AngleSet x;
    int out_col = 0;
    for (int c : cols) {
      ++out_col;
      if (row.contains(c)) x = x | AngleSet::single(out_col);
    }
    if (rows.empty() || x != rows.back()) rows.push_back(x);
  }
  return TreeCode::from_chain_unchecked(static_cast<int>(cols.size()), std::move(rows));
}

bool tree_less(const TreeCode& a, const TreeCode& b) {
  if (a.angles() != b.angles()) return a.angles() < b.angles();
  return packed_word(a) < packed_word(b);
}

namespace {

void compositions_of(int total, int parts, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 0) {
    if (total == 0) emit(cur);
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions_of(total - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

std::vector<TreeCode> build_trees(int n) {
  if (n == 0) return {TreeCode()};
  std::vector<TreeCode> out;
  for (int k = 2; k <= n + 1; ++k) {
    const int rem = n - (k - 1);  // angles distributed among subtrees
    std::vector<int> cur;
    compositions_of(rem, k, cur, [&](const std::vector<int>& comp) {
      std::vector<std::size_t> idx(comp.size(), 0);
      while (true) {
        std::vector<TreeCode> subs;
        subs.reserve(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
          subs.push_back(enumerate_trees(comp[i])[idx[i]]);
        out.push_back(vee(subs));
        std::size_t i = comp.size();
        while (i > 0) {
          --i;
          if (++idx[i] < enumerate_trees(comp[i]).size()) break;
          idx[i] = 0;
          if (i == 0) return;
        }
      }
    });
  }
  std::sort(out.begin(), out.end(), tree_less);
  return out;
}

}  // namespace

const std::vector<TreeCode>& enumerate_trees(int n) {
  if (n < 0 || n > kCapacity) throw capacity_error("tree degree outside [0..64]");
  static std::map<int, std::vector<TreeCode>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  for (int m = 0; m < n; ++m) enumerate_trees(m);  // fill dependencies first
  std::vector<TreeCode> built = build_trees(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(built)).first->second;
}

std::uint64_t hash_tree(const TreeCode& t) {
  std::uint64_t h = 0;
  for (const AngleSet& row : t.chain()) h += row.bits();
  return h;
}

std::uint64_t hash_pair(const TreeCode& t1, const TreeCode& t2) {
  return hash_tree(t1) + (hash_tree(t2) << 32);
}

std::string render_grid(const TreeCode& t) {
  std::string out;
  for (int i = t.height(); i >= 0; --i) {
    for (int a = 1; a <= t.angles(); ++a)
      out.push_back(t.row(i).contains(a) ? '#' : '.');
    if (i > 0) out.push_back('\n');
  }
  return out;
}

TreeCode parse_grid(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);
  if (lines.size() == 1 && lines[0].empty()) return TreeCode();

  const std::size_t n = lines.front().size();
  std::vector<AngleSet> chain;
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    if (it->size() != n) throw parse_error("ragged grid rows");
    AngleSet row;
    for (std::size_t j = 0; j < n; ++j) {
      char c = (*it)[j];
      if (c == '#')
        row = row | AngleSet::single(static_cast<int>(j) + 1);
      else if (c != '.')
        throw parse_error(std::string("illegal grid character '") + c + "'");
    }
    chain.push_back(row);
  }
  return TreeCode::from_chain(static_cast<int>(n), std::move(chain));
}

}  // namespace tridend
