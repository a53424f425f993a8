#pragma once

#include <stdexcept>
#include <string>

namespace tridend {

/// A tree, forest or product would need more than kCapacity angles.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text, grid, word or JSON.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A self-check that must hold by construction failed (pipeline output not
/// primitive, corrupt cache, ...). Never swallowed.
class verify_error : public std::runtime_error {
 public:
  explicit verify_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tridend
