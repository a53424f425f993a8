#include "tridend/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tridend/errors.hpp"
#include "tridend/rational.hpp"

namespace tridend {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "grid") return OutputFormat::Grid;
  if (name == "packed") return OutputFormat::Packed;
  if (name == "json") return OutputFormat::Json;
  if (name == "tikz") return OutputFormat::Tikz;
  throw parse_error("unknown format '" + name + "' (grid, packed, json, tikz)");
}

std::string word_to_string(const PackedWord& w) {
  if (w.empty()) return "";
  int m = *std::max_element(w.begin(), w.end());
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (m > 9 && i > 0) out.push_back(',');
    out.append(std::to_string(w[i]));
  }
  return out;
}

PackedWord word_from_string(const std::string& s) {
  PackedWord w;
  if (s.empty()) return w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("malformed packed word '" + s + "'");
      w.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw parse_error("malformed packed word '" + s + "'");
      w.push_back(c - '0');
    }
  }
  return w;
}

std::string tree_to_text(const TreeCode& t) {
  if (t.is_unit()) return "e";
  return word_to_string(packed_word(t));
}

TreeCode tree_from_text(const std::string& s) {
  if (s.empty() || s == "e") return TreeCode();
  return code_from_packed_word(word_from_string(s));
}

std::string vector_to_text(const TreeVector& v) {
  if (v.is_zero()) return "0\n";
  std::string out;
  for (const auto& [t, c] : v.sorted_terms()) {
    out += rational_to_string(c);
    out += ' ';
    out += tree_to_text(t);
    out += '\n';
  }
  return out;
}

std::string tensor_to_text(const TensorVector& v) {
  if (v.is_zero()) return "0\n";
  std::string out;
  for (const auto& [key, c] : v.sorted_terms()) {
    out += rational_to_string(c);
    out += ' ';
    out += tree_to_text(key.first);
    out += " | ";
    out += tree_to_text(key.second);
    out += '\n';
  }
  return out;
}

json tree_to_json(const TreeCode& t) {
  json chain = json::array();
  for (const AngleSet& row : t.chain()) chain.push_back(row.elements());
  return json{{"n", t.angles()}, {"chain", chain}};
}

TreeCode tree_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("tree JSON must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "chain") throw parse_error("unknown field '" + key + "' in tree JSON");
  if (!j.contains("n") || !j.contains("chain")) throw parse_error("tree JSON needs 'n' and 'chain'");
  if (!j["n"].is_number_integer() || !j["chain"].is_array())
    throw parse_error("malformed tree JSON");
  int n = j["n"].get<int>();
  if (n < 0 || n > kCapacity) throw capacity_error("tree degree outside [0..64]");
  std::vector<AngleSet> chain;
  for (const json& row : j["chain"]) {
    if (!row.is_array()) throw parse_error("chain rows must be arrays");
    AngleSet s;
    for (const json& x : row) {
      if (!x.is_number_integer()) throw parse_error("chain entries must be integers");
      int v = x.get<int>();
      if (v < 1 || v > n) throw parse_error("angle index outside [1..n]");
      s = s | AngleSet::single(v);
    }
    chain.push_back(s);
  }
  return TreeCode::from_chain(n, std::move(chain));
}

json vector_to_json(const TreeVector& v) {
  json out = json::array();
  for (const auto& [t, c] : v.sorted_terms())
    out.push_back(json{{"tree", word_to_string(packed_word(t))},
                       {"coeff", rational_to_string(c)}});
  return out;
}

TreeVector vector_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("vector JSON must be an array of terms");
  TreeVector v;
  for (const json& term : j) {
    if (!term.is_object()) throw parse_error("vector terms must be objects");
    for (const auto& [key, value] : term.items())
      if (key != "tree" && key != "coeff")
        throw parse_error("unknown field '" + key + "' in vector term");
    if (!term.contains("tree") || !term.contains("coeff") || !term["tree"].is_string() ||
        !term["coeff"].is_string())
      throw parse_error("vector terms need string 'tree' and 'coeff'");
    TreeCode t = code_from_packed_word(word_from_string(term["tree"].get<std::string>()));
    v.add(t, rational_from_string(term["coeff"].get<std::string>()));
  }
  return v;
}

json tensor_to_json(const TensorVector& v) {
  json out = json::array();
  for (const auto& [key, c] : v.sorted_terms())
    out.push_back(json{{"left", word_to_string(packed_word(key.first))},
                       {"right", word_to_string(packed_word(key.second))},
                       {"coeff", rational_to_string(c)}});
  return out;
}

namespace {

struct Layout {
  double x = 0;
  int level = 0;           // 0 marks a leaf
  std::vector<Layout> kids;
};

constexpr double kStep = 0.25;

// Rebuild the vertex structure over an angle window: the window's root is
// the vertex owning its lowest-level angles, which split the window into the
// child regions. Levels stay global so rows line up across subtrees.
Layout layout_window(const std::vector<int>& levels, int lo, int hi, double& next_leaf_x) {
  if (lo > hi) {
    Layout leaf;
    leaf.x = next_leaf_x;
    next_leaf_x += kStep;
    return leaf;
  }
  Layout node;
  node.level = levels[static_cast<std::size_t>(lo - 1)];
  for (int a = lo; a <= hi; ++a)
    node.level = std::min(node.level, levels[static_cast<std::size_t>(a - 1)]);
  int start = lo;
  for (int a = lo; a <= hi; ++a) {
    if (levels[static_cast<std::size_t>(a - 1)] == node.level) {
      node.kids.push_back(layout_window(levels, start, a - 1, next_leaf_x));
      start = a + 1;
    }
  }
  node.kids.push_back(layout_window(levels, start, hi, next_leaf_x));
  node.x = (node.kids.front().x + node.kids.back().x) / 2;
  return node;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void emit_tikz(const Layout& node, int height, std::string& out) {
  const double py = kStep * (node.level - 1);
  for (const Layout& k : node.kids) {
    double cy = k.level == 0 ? kStep * height : kStep * (k.level - 1);
    double x = k.x, y = cy;
    while (y > py + kStep + 1e-9) {  // vertical run, one segment per level line
      out += "  \\draw (" + coord(x) + "," + coord(y) + ") -- (" + coord(x) + "," +
             coord(y - kStep) + ");\n";
      y -= kStep;
    }
    out += "  \\draw (" + coord(x) + "," + coord(y) + ") -- (" + coord(node.x) + "," +
           coord(py) + ");\n";
    emit_tikz(k, height, out);
  }
  if (node.kids.empty())
    out += "  \\draw[fill=white] (" + coord(node.x) + "," + coord(kStep * height) +
           ") circle (0.03);\n";
  else
    out += "  \\filldraw (" + coord(node.x) + "," + coord(py) + ") circle (0.03);\n";
}

}  // namespace

std::string tree_to_tikz(const TreeCode& t) {
  std::string out = "\\begin{tikzpicture}\n";
  if (t.is_unit()) {
    out += "  \\draw[fill=white] (0.000000,0.000000) circle (0.03);\n";
  } else {
    double next_leaf = 0;
    Layout root = layout_window(angle_levels(t), 1, t.angles(), next_leaf);
    emit_tikz(root, t.height(), out);
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

std::string render_tree(const TreeCode& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::Grid: return render_grid(t) + "\n";
    case OutputFormat::Packed: return tree_to_text(t) + "\n";
    case OutputFormat::Json: return tree_to_json(t).dump(2) + "\n";
    case OutputFormat::Tikz: return tree_to_tikz(t);
  }
  return {};
}

std::string render_vector(const TreeVector& v, OutputFormat f) {
  switch (f) {
    case OutputFormat::Packed: return vector_to_text(v);
    case OutputFormat::Json: return vector_to_json(v).dump(2) + "\n";
    case OutputFormat::Grid: {
      std::string out;
      for (const auto& [t, c] : v.sorted_terms())
        out += rational_to_string(c) + " *\n" + render_grid(t) + "\n";
      return out;
    }
    case OutputFormat::Tikz: {
      std::string out;
      for (const auto& [t, c] : v.sorted_terms())
        out += "% coeff " + rational_to_string(c) + "\n" + tree_to_tikz(t);
      return out;
    }
  }
  return {};
}

std::string render_tensor(const TensorVector& v, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return tensor_to_json(v).dump(2) + "\n";
    case OutputFormat::Packed: return tensor_to_text(v);
    case OutputFormat::Grid: {
      std::string out;
      for (const auto& [key, c] : v.sorted_terms())
        out += rational_to_string(c) + " *\n" + render_grid(key.first) + "\n(x)\n" +
               render_grid(key.second) + "\n";
      return out;
    }
    case OutputFormat::Tikz: {
      std::string out;
      for (const auto& [key, c] : v.sorted_terms())
        out += "% coeff " + rational_to_string(c) + "\n" + tree_to_tikz(key.first) +
               "% (x)\n" + tree_to_tikz(key.second);
      return out;
    }
  }
  return {};
}

}  // namespace tridend
