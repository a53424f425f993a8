#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tridend/errors.hpp"
#include "tridend/serialization.hpp"
#include "tridend/tree_code.hpp"

using namespace tridend;

namespace {

TreeCode tree(const std::string& word) { return tree_from_text(word); }

std::vector<AngleSet> rows(std::initializer_list<std::vector<int>> sets) {
  std::vector<AngleSet> out;
  for (const auto& s : sets) {
    AngleSet r;
    for (int x : s) r = r | AngleSet::single(x);
    out.push_back(r);
  }
  return out;
}

// Independent count oracle: (n+1) a(n) = (6n-3) a(n-1) - (n-2) a(n-2).
long long schroeder_count(int n) {
  std::vector<long long> a{1, 1};
  for (int k = 2; k <= n; ++k)
    a.push_back(((6LL * k - 3) * a[k - 1] - (k - 2) * a[k - 2]) / (k + 1));
  return a[n];
}

}  // namespace

TEST_CASE("corolla") {
  CHECK(corolla(1).chain() == rows({{}, {1}}));
  CHECK(corolla(2).chain() == rows({{}, {1, 2}}));
  CHECK(corolla(3).chain() == rows({{}, {1, 2, 3}}));
  CHECK(corolla(3).angles() == 3);
  CHECK(corolla(3).height() == 1);
  CHECK_THROWS_AS(corolla(65), capacity_error);
}

TEST_CASE("vee builds canonical codes") {
  CHECK(vee({TreeCode(), TreeCode()}) == corolla(1));
  CHECK(vee({TreeCode(), TreeCode(), TreeCode(), TreeCode()}) == corolla(3));

  // grafting a corolla next to a leaf lands inside Sch(3)
  TreeCode t = vee({corolla(2), TreeCode()});
  CHECK(t.angles() == 3);
  const auto& all3 = enumerate_trees(3);
  CHECK(std::find(all3.begin(), all3.end(), t) != all3.end());

  // canonical stacking: rightmost subtree lowest
  TreeCode s = vee({corolla(1), vee({corolla(1), TreeCode(), TreeCode()})});
  CHECK(word_to_string(packed_word(s)) == "14233");

  CHECK(bool(is_valid_code(t)));
  CHECK(bool(is_valid_code(s)));
}

TEST_CASE("enumerate_trees counts and order") {
  const int expected[] = {1, 1, 3, 11, 45, 197};
  for (int n = 0; n <= 5; ++n) {
    CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(expected[n]));
    CHECK(schroeder_count(n) == expected[n]);
  }
  CHECK(enumerate_trees(6).size() == static_cast<std::size_t>(schroeder_count(6)));
  CHECK(enumerate_trees(0).front() == TreeCode());

  // deterministic word order, strictly increasing
  for (int n = 2; n <= 4; ++n) {
    const auto& trees = enumerate_trees(n);
    for (std::size_t i = 0; i + 1 < trees.size(); ++i)
      CHECK(packed_word(trees[i]) < packed_word(trees[i + 1]));
  }
}

TEST_CASE("packed words") {
  CHECK(word_to_string(packed_word(corolla(1))) == "1");

  // six-leaf tree with chain (empty, {3,5}, {3,4,5}, [1..5])
  TreeCode t = vee({corolla(2), corolla(1), TreeCode()});
  CHECK(t.chain() == rows({{}, {3, 5}, {3, 4, 5}, {1, 2, 3, 4, 5}}));
  CHECK(word_to_string(packed_word(t)) == "11323");

  CHECK(word_to_string(packed_word(tree("1326544"))) == "1326544");
}

TEST_CASE("code_from_packed_word") {
  CHECK(code_from_packed_word({}) == TreeCode());
  CHECK(code_from_packed_word({1, 1}) == corolla(2));
  CHECK(tree("1326544").angles() == 7);
  CHECK(tree("1326544").height() == 6);

  CHECK_THROWS_AS(code_from_packed_word({1, 2, 1}), parse_error);  // not left-priority
  CHECK_THROWS_AS(code_from_packed_word({2}), parse_error);        // not packed
  CHECK_THROWS_AS(code_from_packed_word({1, 1, 3}), parse_error);  // letter gap
  CHECK_THROWS_AS(code_from_packed_word({0, 1}), parse_error);
}

TEST_CASE("bijection with packed words up to degree 6") {
  for (int n = 0; n <= 6; ++n) {
    std::set<PackedWord> words;
    for (const TreeCode& t : enumerate_trees(n)) {
      PackedWord w = packed_word(t);
      CHECK(static_cast<int>(w.size()) == n);
      CHECK(words.insert(w).second);  // injective
      CHECK(code_from_packed_word(w) == t);
    }
  }
}

TEST_CASE("is_valid_code") {
  CHECK(bool(is_valid_code(1, rows({{}, {1}}))));
  Validity bad = is_valid_code(1, rows({{}, {1}, {1}}));
  CHECK_FALSE(bool(bad));
  CHECK(bad.reason.find("strictly") != std::string::npos);

  CHECK(bool(is_valid_code(2, rows({{}, {2}, {1, 2}}))));
  CHECK_FALSE(bool(is_valid_code(3, rows({{}, {2}, {1, 2, 3}}))));  // non-canonical levelling
  CHECK_FALSE(bool(is_valid_code(2, rows({{1}, {1, 2}}))));         // no empty bottom row
  CHECK_FALSE(bool(is_valid_code(3, rows({{}, {1, 2}}))));          // top row not full

  for (int n = 0; n <= 4; ++n)
    for (const TreeCode& t : enumerate_trees(n)) CHECK(bool(is_valid_code(t)));
}

TEST_CASE("hashes") {
  CHECK(hash_tree(TreeCode()) == 0);
  CHECK(hash_tree(corolla(1)) == 1);
  CHECK(hash_tree(corolla(3)) == 7);
  CHECK(hash_pair(TreeCode(), TreeCode()) == 0);
  CHECK(hash_pair(corolla(1), TreeCode()) == 1);
  CHECK(hash_pair(TreeCode(), corolla(1)) == (std::uint64_t{1} << 32));

  std::set<std::uint64_t> hashes;
  std::size_t trees = 0;
  for (int n = 0; n <= 5; ++n)
    for (const TreeCode& t : enumerate_trees(n)) {
      hashes.insert(hash_tree(t));
      ++trees;
    }
  MESSAGE("hash collisions over Sch(<=5): ", trees - hashes.size(), " of ", trees);
}

TEST_CASE("grid rendering") {
  CHECK(render_grid(corolla(1)) == "#\n.");
  TreeCode t = vee({corolla(2), corolla(1), TreeCode()});
  CHECK(render_grid(t) == "#####\n..###\n..#.#\n.....");
  CHECK(render_grid(TreeCode()) == "");

  for (int n = 0; n <= 3; ++n)
    for (const TreeCode& tt : enumerate_trees(n)) CHECK(parse_grid(render_grid(tt)) == tt);

  CHECK_THROWS_AS(parse_grid("##\n#"), parse_error);    // ragged
  CHECK_THROWS_AS(parse_grid("#x\n.."), parse_error);   // illegal character
  CHECK_THROWS_AS(parse_grid("..\n##"), parse_error);   // upside-down chain
}

TEST_CASE("restrict_to_columns recovers components") {
  TreeCode t = tree("1326544");
  CHECK(restrict_to_columns(t, {1, 2, 3}) == tree("132"));
  CHECK(restrict_to_columns(t, {6, 7}) == corolla(2));
  CHECK(restrict_to_columns(t, {4, 5}) == tree("21"));
}
