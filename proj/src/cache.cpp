#include "tridend/cache.hpp"

#include <fstream>

#include <json.hpp>

#include "tridend/errors.hpp"
#include "tridend/serialization.hpp"

namespace tridend {

using nlohmann::json;

std::filesystem::path cache_file(const std::filesystem::path& dir, int degree) {
  return dir / ("prim_" + std::to_string(degree) + ".json");
}

void write_basis_cache(const std::filesystem::path& dir, int degree,
                       const std::vector<TreeVector>& basis) {
  std::filesystem::create_directories(dir);
  json vectors = json::array();
  for (const TreeVector& v : basis) vectors.push_back(vector_to_json(v));
  json file{{"version", kLibraryVersion},
            {"tree_order", kTreeOrderId},
            {"degree", degree},
            {"basis", vectors}};
  std::ofstream out(cache_file(dir, degree), std::ios::binary | std::ios::trunc);
  out << file.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + cache_file(dir, degree).string());
}

std::optional<std::vector<TreeVector>> read_basis_cache(const std::filesystem::path& dir,
                                                        int degree) {
  const std::filesystem::path path = cache_file(dir, degree);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  json file;
  try {
    in >> file;
  } catch (const json::exception& e) {
    throw parse_error("corrupt cache file " + path.string() + ": " + e.what());
  }
  if (!file.is_object() || !file.contains("version") || !file.contains("tree_order") ||
      !file.contains("degree") || !file.contains("basis"))
    throw parse_error("corrupt cache file " + path.string() + ": missing header");
  for (const auto& [key, value] : file.items())
    if (key != "version" && key != "tree_order" && key != "degree" && key != "basis")
      throw parse_error("corrupt cache file " + path.string() + ": unknown field '" + key + "'");
  if (file["version"] != kLibraryVersion || file["tree_order"] != kTreeOrderId)
    throw parse_error("stale cache file " + path.string() + " (version or tree order mismatch)");
  if (file["degree"] != degree)
    throw parse_error("cache file " + path.string() + " records the wrong degree");
  std::vector<TreeVector> basis;
  std::size_t idx = 0;
  for (const json& v : file["basis"]) {
    try {
      basis.push_back(vector_from_json(v));
    } catch (const parse_error& e) {
      throw parse_error("corrupt cache file " + path.string() + " at degree " +
                        std::to_string(degree) + " index " + std::to_string(idx) + ": " +
                        e.what());
    }
    ++idx;
  }
  return basis;
}

}  // namespace tridend
