#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tridend/cache.hpp"
#include "tridend/coproduct.hpp"
#include "tridend/errors.hpp"
#include "tridend/primitives.hpp"
#include "tridend/products.hpp"
#include "tridend/quasi_shuffle.hpp"
#include "tridend/serialization.hpp"

namespace {

using namespace tridend;

TreeCode tree_from_arg(const std::string& text, const std::string& json_file) {
  if (!json_file.empty()) {
    std::ifstream in(json_file);
    if (!in) throw parse_error("cannot open " + json_file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(std::string("bad JSON in ") + json_file + ": " + e.what());
    }
    return tree_from_json(j);
  }
  return tree_from_text(text);
}

Op op_from_name(const std::string& name) {
  if (name == "prec") return Op::Prec;
  if (name == "mid") return Op::Mid;
  if (name == "succ") return Op::Succ;
  if (name == "preceq") return Op::Preceq;
  if (name == "succeq") return Op::Succeq;
  if (name == "star") return Op::Star;
  throw parse_error("unknown product '" + name + "' (prec, mid, succ, preceq, succeq, star)");
}

int cmd_trees(int degree, OutputFormat format) {
  const std::vector<TreeCode>& trees = enumerate_trees(degree);
  if (format == OutputFormat::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const TreeCode& t : trees) out.push_back(tree_to_json(t));
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const TreeCode& t : trees) {
    std::cout << render_tree(t, format);
    if (format == OutputFormat::Grid) std::cout << '\n';
  }
  return 0;
}

int cmd_primitives(int max_degree, const std::string& cache_dir, OutputFormat format) {
  GradedPrimitiveBasis bases;
  bases.by_degree.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 1; n <= max_degree; ++n) {
    std::optional<std::vector<TreeVector>> cached;
    if (!cache_dir.empty()) {
      try {
        cached = read_basis_cache(cache_dir, n);
      } catch (const parse_error& e) {
        std::cerr << "note: rejecting cache for degree " << n << ": " << e.what() << '\n';
      }
    }
    if (cached) {
      bases.by_degree[static_cast<std::size_t>(n)] = std::move(*cached);
      continue;
    }
    std::vector<TreeVector> basis = extract_basis(generate_candidates(n, bases), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!is_primitive(basis[i]))
        throw verify_error("generated basis vector is not primitive at degree " +
                           std::to_string(n) + ", index " + std::to_string(i));
    if (!cache_dir.empty()) write_basis_cache(cache_dir, n, basis);
    bases.by_degree[static_cast<std::size_t>(n)] = std::move(basis);
  }

  if (format == OutputFormat::Json) {
    nlohmann::json bj = nlohmann::json::object();
    for (int n = 1; n <= max_degree; ++n) {
      nlohmann::json list = nlohmann::json::array();
      for (const TreeVector& v : bases.at(n)) list.push_back(vector_to_json(v));
      bj[std::to_string(n)] = list;
    }
    nlohmann::json out{{"dimensions", bases.dimensions()}, {"bases", bj}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "dimensions:";
  for (int d : bases.dimensions()) std::cout << ' ' << d;
  std::cout << '\n';
  for (int n = 1; n <= max_degree; ++n) {
    std::cout << "\ndegree " << n << " dimension " << bases.at(n).size() << '\n';
    for (const TreeVector& v : bases.at(n)) {
      std::cout << render_vector(v, format);
      if (format != OutputFormat::Packed) std::cout << '\n';
      else std::cout << "--\n";
    }
  }
  return 0;
}

int cmd_verify(int max_degree, const std::string& cache_dir) {
  for (int n = 1; n <= max_degree; ++n) {
    std::optional<std::vector<TreeVector>> cached;
    try {
      cached = read_basis_cache(cache_dir, n);
    } catch (const parse_error& e) {
      std::cout << "FAIL degree " << n << ": " << e.what() << '\n';
      return 1;
    }
    if (!cached) {
      std::cout << "FAIL degree " << n << ": no cache file\n";
      return 1;
    }
    for (std::size_t i = 0; i < cached->size(); ++i) {
      const TreeVector& v = (*cached)[i];
      auto deg = v.homogeneous_degree();
      if (!deg || *deg != n) {
        std::cout << "FAIL degree " << n << " index " << i << ": not homogeneous of degree " << n
                  << '\n';
        return 1;
      }
      if (!is_primitive(v)) {
        std::cout << "FAIL degree " << n << " index " << i << ": not primitive\n";
        return 1;
      }
    }
    if (n <= 4) {
      std::vector<TreeVector> oracle = kernel_oracle(n);
      if (oracle.size() != cached->size() || !same_span(*cached, oracle, n)) {
        std::cout << "FAIL degree " << n << ": cached basis does not span the coproduct kernel ("
                  << cached->size() << " vs " << oracle.size() << ")\n";
        return 1;
      }
    }
    std::cout << "ok degree " << n << ": " << cached->size() << " primitive vectors\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free tridendriform algebra on Schroeder trees"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "packed";
  app.add_option("--format,-f", format_name, "output format: grid, packed, json, tikz")
      ->capture_default_str();

  // trees
  auto* trees_cmd = app.add_subcommand("trees", "list all trees of a degree");
  int degree = 0;
  trees_cmd->add_option("--degree,-d", degree, "tree degree (angles)")->required();

  // product
  auto* prod_cmd = app.add_subcommand("product", "product of two trees");
  std::string op_name, t_json, s_json;
  std::vector<std::string> prod_trees;
  prod_cmd->add_option("op,--op", op_name, "prec, mid, succ, preceq, succeq or star");
  prod_cmd->add_option("trees", prod_trees, "the two trees as packed words")->expected(0, 2);
  prod_cmd->add_option("--json-file", t_json, "left tree from a JSON file");
  prod_cmd->add_option("--json-file-right", s_json, "right tree from a JSON file");

  // coproduct
  auto* cop_cmd = app.add_subcommand("coproduct", "coproduct of a tree");
  std::string cop_arg, cop_json;
  cop_cmd->add_option("t", cop_arg, "tree as a packed word");
  cop_cmd->add_option("--json-file", cop_json, "tree from a JSON file");

  // primitives
  auto* prim_cmd = app.add_subcommand("primitives", "graded bases of the primitive space");
  int max_degree = 0;
  std::string cache_dir;
  prim_cmd->add_option("--max-degree,-d,--degree", max_degree, "largest degree to compute")
      ->required();
  prim_cmd->add_option("--cache", cache_dir, "cache directory (one JSON file per degree)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "re-check every cached basis vector");
  int ver_degree = 0;
  std::string ver_cache;
  ver_cmd->add_option("--max-degree,-d,--degree", ver_degree, "largest degree to verify")
      ->required();
  ver_cmd->add_option("--cache", ver_cache, "cache directory")->required();

  // quasishuffles
  auto* qs_cmd = app.add_subcommand("quasishuffles", "enumerate (k,l)-quasi-shuffles");
  int qk = 0, ql = 0;
  qs_cmd->add_option("k", qk, "first block length")->required();
  qs_cmd->add_option("l", ql, "second block length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    OutputFormat format = parse_format(format_name);
    if (trees_cmd->parsed()) return cmd_trees(degree, format);
    if (prod_cmd->parsed()) {
      if (op_name.empty()) throw parse_error("product needs an operation name");
      // positional words fill whichever sides the JSON flags leave open
      std::size_t next = 0;
      auto next_word = [&]() -> std::string {
        return next < prod_trees.size() ? prod_trees[next++] : std::string();
      };
      TreeCode t = !t_json.empty() ? tree_from_arg("", t_json) : tree_from_text(next_word());
      TreeCode s = !s_json.empty() ? tree_from_arg("", s_json) : tree_from_text(next_word());
      if (next < prod_trees.size()) throw parse_error("too many tree arguments");
      std::cout << render_vector(product(TreeVector(t), TreeVector(s), op_from_name(op_name)),
                                 format);
      return 0;
    }
    if (cop_cmd->parsed()) {
      TreeCode t = tree_from_arg(cop_arg, cop_json);
      std::cout << render_tensor(coproduct(t), format);
      return 0;
    }
    if (prim_cmd->parsed()) return cmd_primitives(max_degree, cache_dir, format);
    if (ver_cmd->parsed()) return cmd_verify(ver_degree, ver_cache);
    if (qs_cmd->parsed()) {
      for (const QuasiShuffle& s : enumerate_shuffles(qk, ql)) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
          if (i) std::cout << ',';
          std::cout << s.values[i];
        }
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const verify_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
