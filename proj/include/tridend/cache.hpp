#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "tridend/tree_vector.hpp"

namespace tridend {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kTreeOrderId = "packed-word-lex";

/// One file per degree: prim_<n>.json, header recording the library version
/// and the canonical tree order so stale caches are detected.
std::filesystem::path cache_file(const std::filesystem::path& dir, int degree);

void write_basis_cache(const std::filesystem::path& dir, int degree,
                       const std::vector<TreeVector>& basis);

/// Empty optional when the file does not exist; parse_error on a corrupt or
/// stale file (wrong version, wrong tree order, wrong degree, bad JSON).
std::optional<std::vector<TreeVector>> read_basis_cache(const std::filesystem::path& dir,
                                                        int degree);

}  // namespace tridend
