#include "tridend/quasi_shuffle.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace tridend {

Family QuasiShuffle::family() const {
  if (k < 1 || l < 1)
    throw std::logic_error("family is only defined when both blocks are nonempty");
  const bool first = at(1) == 1;
  const bool second = at(k + 1) == 1;
  if (first && second) return Family::M;
  return first ? Family::L : Family::R;
}

namespace {

QuasiShuffle identity(int k, int l) {
  QuasiShuffle s;
  s.k = k;
  s.l = l;
  s.r = k + l;  // one of them is zero
  s.values.resize(static_cast<std::size_t>(k + l));
  for (int i = 1; i <= k + l; ++i) s.values[static_cast<std::size_t>(i - 1)] = i;
  return s;
}

// Rebuild sigma from a smaller shuffle per the L/M/R recursion: prepend the
// value 1 at the stated positions and shift everything else up by one.
QuasiShuffle extend(const QuasiShuffle& base, int k, int l, Family fam) {
  QuasiShuffle s;
  s.k = k;
  s.l = l;
  s.r = base.r + 1;
  s.values.reserve(static_cast<std::size_t>(k + l));
  switch (fam) {
    case Family::L:  // base in Batc(k-1, l)
      s.values.push_back(1);
      for (int v : base.values) s.values.push_back(v + 1);
      break;
    case Family::M: {  // base in Batc(k-1, l-1), merge at positions 1 and k+1
      s.values.push_back(1);
      for (int i = 0; i < k - 1; ++i) s.values.push_back(base.values[static_cast<std::size_t>(i)] + 1);
      s.values.push_back(1);
      for (int i = k - 1; i < k - 1 + l - 1; ++i)
        s.values.push_back(base.values[static_cast<std::size_t>(i)] + 1);
      break;
    }
    case Family::R: {  // base in Batc(k, l-1)
      for (int i = 0; i < k; ++i) s.values.push_back(base.values[static_cast<std::size_t>(i)] + 1);
      s.values.push_back(1);
      for (int i = k; i < k + l - 1; ++i) s.values.push_back(base.values[static_cast<std::size_t>(i)] + 1);
      break;
    }
  }
  return s;
}

std::vector<QuasiShuffle> build(int k, int l) {
  if (k == 0 && l == 0) {
    QuasiShuffle empty;
    return {empty};
  }
  if (k == 0 || l == 0) return {identity(k, l)};
  std::vector<QuasiShuffle> out;
  for (const QuasiShuffle& b : enumerate_shuffles(k - 1, l)) out.push_back(extend(b, k, l, Family::L));
  for (const QuasiShuffle& b : enumerate_shuffles(k - 1, l - 1)) out.push_back(extend(b, k, l, Family::M));
  for (const QuasiShuffle& b : enumerate_shuffles(k, l - 1)) out.push_back(extend(b, k, l, Family::R));
  return out;
}

}  // namespace

const std::vector<QuasiShuffle>& enumerate_shuffles(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("negative shuffle type");
  static std::map<std::pair<int, int>, std::vector<QuasiShuffle>> cache;
  static std::mutex mu;
  const auto key = std::make_pair(k, l);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  if (k >= 1 && l >= 1) {  // fill dependencies before building
    enumerate_shuffles(k - 1, l);
    enumerate_shuffles(k - 1, l - 1);
    enumerate_shuffles(k, l - 1);
  }
  std::vector<QuasiShuffle> built = build(k, l);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(built)).first->second;
}

std::vector<QuasiShuffle> enumerate_family(int k, int l, FamilySet families) {
  if (k < 1 || l < 1) throw std::invalid_argument("family enumeration needs k, l >= 1");
  std::vector<QuasiShuffle> out;
  for (const QuasiShuffle& s : enumerate_shuffles(k, l))
    if (families.has(s.family())) out.push_back(s);
  return out;
}

mpz_class count_shuffles(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("negative shuffle type");
  static std::map<std::pair<int, int>, mpz_class> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= l; ++b) {
      auto key = std::make_pair(a, b);
      if (cache.count(key)) continue;
      if (a == 0 || b == 0)
        cache[key] = 1;
      else
        cache[key] = cache[{a - 1, b}] + cache[{a - 1, b - 1}] + cache[{a, b - 1}];
    }
  return cache[{k, l}];
}

}  // namespace tridend
