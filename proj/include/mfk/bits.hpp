#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mfk {

/// Subset of the ground set stored as a machine word; bit i is element i+1.
using ElementSet = std::uint64_t;

inline constexpr int kHardMaxElements = 63;

constexpr ElementSet singleton(int element) { return ElementSet{1} << element; }

constexpr ElementSet full_set(int n) {
  return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

constexpr int cardinality(ElementSet s) { return std::popcount(s); }

constexpr bool contains(ElementSet s, int element) { return (s >> element) & 1U; }

constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

constexpr bool is_proper_subset(ElementSet a, ElementSet b) { return a != b && is_subset(a, b); }

inline std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

/// 1-based sorted element list, the I/O convention for subsets.
inline std::vector<int> to_one_based(ElementSet s) {
  auto out = elements_of(s);
  for (auto& e : out) ++e;
  return out;
}

/// Compact label such as "124" (elements above 9 are comma separated).
inline std::string label(ElementSet s) {
  std::string out;
  bool wide = s >> 9 != 0;
  for (int e : to_one_based(s)) {
    if (wide && !out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out.empty() ? std::string("{}") : out;
}

/// Calls fn(subset) for every k-subset of `universe`, in increasing numeric order.
template <typename Fn>
void for_each_k_subset(ElementSet universe, int k, Fn&& fn) {
  auto elems = elements_of(universe);
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(ElementSet{0});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElementSet s = 0;
    for (int i : idx) s |= singleton(elems[i]);
    fn(s);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

/// Calls fn(subset) for every subset of `universe` (including empty and itself).
template <typename Fn>
void for_each_subset(ElementSet universe, Fn&& fn) {
  ElementSet s = 0;
  while (true) {
    fn(s);
    if (s == universe) break;
    s = (s - universe) & universe;
  }
}

}  // namespace mfk
