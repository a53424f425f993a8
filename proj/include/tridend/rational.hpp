#pragma once

#include <string>

#include <gmpxx.h>

#include "tridend/errors.hpp"

namespace tridend {

/// Exact rational scalar; arbitrary precision, no floating point anywhere.
using Rational = mpq_class;

/// "p/q", or just "p" when the denominator is one.
inline std::string rational_to_string(const Rational& x) {
  return x.get_str();
}

inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw parse_error("malformed rational '" + s + "'");
  }
  Rational x;
  if (x.set_str(s, 10) != 0) throw parse_error("malformed rational '" + s + "'");
  if (x.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

}  // namespace tridend
