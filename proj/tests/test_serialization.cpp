#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "tridend/cache.hpp"
#include "tridend/errors.hpp"
#include "tridend/serialization.hpp"

using namespace tridend;

namespace {

TreeCode left_ladder(int depth) {
  TreeCode t = corolla(1);
  for (int i = 1; i < depth; ++i) t = vee({t, TreeCode()});
  return t;
}

}  // namespace

TEST_CASE("word strings") {
  CHECK(word_to_string({}) == "");
  CHECK(word_to_string({1, 4, 2, 3, 3}) == "14233");
  CHECK(word_from_string("14233") == PackedWord{1, 4, 2, 3, 3});
  CHECK(word_from_string("") == PackedWord{});

  // letters above nine switch to the comma form
  TreeCode deep = left_ladder(11);
  PackedWord w = packed_word(deep);
  std::string s = word_to_string(w);
  CHECK(s.find(',') != std::string::npos);
  CHECK(word_from_string(s) == w);
  CHECK(tree_from_text(s) == deep);

  CHECK_THROWS_AS(word_from_string("1a2"), parse_error);
  CHECK_THROWS_AS(word_from_string("1,,2"), parse_error);
  CHECK_THROWS_AS(word_from_string("102"), parse_error);
}

TEST_CASE("tree text") {
  CHECK(tree_to_text(TreeCode()) == "e");
  CHECK(tree_from_text("e") == TreeCode());
  CHECK(tree_from_text("") == TreeCode());
  CHECK(tree_to_text(corolla(2)) == "11");
  for (int n = 0; n <= 4; ++n)
    for (const TreeCode& t : enumerate_trees(n)) CHECK(tree_from_text(tree_to_text(t)) == t);
}

TEST_CASE("tree JSON") {
  TreeCode t = tree_from_text("11323");
  nlohmann::json j = tree_to_json(t);
  CHECK(j["n"] == 5);
  CHECK(j["chain"].size() == 4);
  CHECK(j["chain"][0].empty());
  CHECK(tree_from_json(j) == t);

  CHECK(tree_from_json(nlohmann::json{{"n", 0}, {"chain", {nlohmann::json::array()}}}) ==
        TreeCode());

  nlohmann::json extra = j;
  extra["color"] = "green";
  CHECK_THROWS_AS(tree_from_json(extra), parse_error);

  nlohmann::json bad = j;
  bad["chain"][1] = {9};
  CHECK_THROWS_AS(tree_from_json(bad), parse_error);

  CHECK_THROWS_AS(tree_from_json(nlohmann::json{{"n", 2}}), parse_error);
}

TEST_CASE("vector text and JSON") {
  TreeVector v(tree_from_text("12"), Rational(-1));
  v.add(tree_from_text("21"), rational_from_string("1/3"));
  v.add(TreeCode(), Rational(2));

  CHECK(vector_to_text(v) == "2 e\n-1 12\n1/3 21\n");

  nlohmann::json j = vector_to_json(v);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["tree"] == "");
  CHECK(j[0]["coeff"] == "2");
  CHECK(vector_from_json(j) == v);

  nlohmann::json badterm = j;
  badterm[1]["unit"] = true;
  CHECK_THROWS_AS(vector_from_json(badterm), parse_error);
  CHECK_THROWS_AS(rational_from_string("1/0"), parse_error);
  CHECK_THROWS_AS(rational_from_string("0.5"), parse_error);
}

TEST_CASE("tensor rendering") {
  TensorVector tv;
  tv.add(TreeCode(), corolla(1), Rational(1));
  tv.add(corolla(1), TreeCode(), Rational(1));
  CHECK(tensor_to_text(tv) == "1 e | 1\n1 1 | e\n");
  nlohmann::json j = tensor_to_json(tv);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["left"] == "");
  CHECK(j[0]["right"] == "1");
  CHECK(j[0]["coeff"] == "1");
}

TEST_CASE("tikz output") {
  std::string pic = tree_to_tikz(tree_from_text("11323"));
  CHECK(pic.starts_with("\\begin{tikzpicture}"));
  CHECK(pic.find("\\end{tikzpicture}") != std::string::npos);
  // six leaves drawn open, three internal vertices filled
  std::size_t open = 0, filled = 0, pos = 0;
  while ((pos = pic.find("fill=white", pos)) != std::string::npos) { ++open; pos += 1; }
  pos = 0;
  while ((pos = pic.find("\\filldraw (", pos)) != std::string::npos) { ++filled; pos += 1; }
  CHECK(open == 6);
  CHECK(filled == 3);

  CHECK(tree_to_tikz(TreeCode()).find("circle") != std::string::npos);
}

TEST_CASE("basis cache roundtrip and tamper detection") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "tridend_cache_test";
  std::filesystem::remove_all(dir);

  std::vector<TreeVector> basis{TreeVector(corolla(2)),
                                TreeVector(tree_from_text("21")) - TreeVector(tree_from_text("12"))};
  write_basis_cache(dir, 2, basis);

  auto back = read_basis_cache(dir, 2);
  REQUIRE(back.has_value());
  REQUIRE(back->size() == 2);
  CHECK((*back)[0] == basis[0]);
  CHECK((*back)[1] == basis[1]);

  CHECK_FALSE(read_basis_cache(dir, 3).has_value());

  // stale version
  {
    std::ifstream in(cache_file(dir, 2));
    nlohmann::json j;
    in >> j;
    j["version"] = "0.0.0";
    std::ofstream out(cache_file(dir, 2), std::ios::trunc);
    out << j.dump(2);
  }
  CHECK_THROWS_AS(read_basis_cache(dir, 2), parse_error);

  // corrupt coefficient, error names degree and index
  write_basis_cache(dir, 2, basis);
  {
    std::ifstream in(cache_file(dir, 2));
    nlohmann::json j;
    in >> j;
    j["basis"][1][0]["coeff"] = "x";
    std::ofstream out(cache_file(dir, 2), std::ios::trunc);
    out << j.dump(2);
  }
  try {
    read_basis_cache(dir, 2);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("degree 2") != std::string::npos);
    CHECK(msg.find("index 1") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}
