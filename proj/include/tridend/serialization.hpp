#pragma once

#include <string>

#include <json.hpp>

#include "tridend/tree_code.hpp"
#include "tridend/tree_vector.hpp"

namespace tridend {

enum class OutputFormat { Grid, Packed, Json, Tikz };

OutputFormat parse_format(const std::string& name);

/// Space-free digit string when every letter fits one digit, otherwise
/// comma-separated. The unit tree's word is the empty string.
std::string word_to_string(const PackedWord& w);
PackedWord word_from_string(const std::string& s);

/// Packed-word text with "e" standing in for the unit tree, so vectors print
/// one unambiguous token per tree.
std::string tree_to_text(const TreeCode& t);

/// Accepts a packed word, "" or "e".
TreeCode tree_from_text(const std::string& s);

/// Canonical text form: one "<coeff> <tree>" line per term, terms in tree
/// order. Also the vector dedup key.
std::string vector_to_text(const TreeVector& v);
std::string tensor_to_text(const TensorVector& v);

nlohmann::json tree_to_json(const TreeCode& t);
TreeCode tree_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const TreeVector& v);
TreeVector vector_from_json(const nlohmann::json& j);

nlohmann::json tensor_to_json(const TensorVector& v);

/// Levelled drawing, internal vertices filled, leaves open; write-only.
std::string tree_to_tikz(const TreeCode& t);

std::string render_tree(const TreeCode& t, OutputFormat f);
std::string render_vector(const TreeVector& v, OutputFormat f);
std::string render_tensor(const TensorVector& v, OutputFormat f);

}  // namespace tridend
