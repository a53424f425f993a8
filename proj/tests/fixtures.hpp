#pragma once

// Reference bases of the primitive spaces at low degree, entered by hand as
// signed packed words. Span equality against these is part of the acceptance
// gate; the listed vectors are an ad hoc generating family, so only the span
// is meaningful, not the order or the signs.

#include <utility>
#include <vector>

namespace tridend::fixtures {

using SignedWord = std::pair<const char*, int>;

inline const std::vector<std::vector<SignedWord>> kPrimitiveBasisDegree2 = {
    {{"21", -1}, {"12", 1}},
    {{"11", 1}},
};

inline const std::vector<std::vector<SignedWord>> kPrimitiveBasisDegree3 = {
    {{"321", -1}, {"123", -1}, {"312", 1}, {"213", 1}},
    {{"321", -1}, {"112", -1}, {"123", -1}, {"132", 1}},
    {{"122", -1}, {"212", 1}},
    {{"122", -1}, {"221", 1}},
    {{"112", -1}, {"211", 1}},
    {{"111", 1}},
};

}  // namespace tridend::fixtures
