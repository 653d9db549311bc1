#pragma once

// Subsets of {1,...,n} stored as 64-bit masks; element i occupies bit i-1.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace acs {

using Mask = std::uint64_t;

inline constexpr int kMaxPoints = 63;

constexpr Mask full_mask(int n) { return n <= 0 ? Mask{0} : ~Mask{0} >> (64 - n); }
constexpr Mask single(int element) { return Mask{1} << (element - 1); }
constexpr bool contains(Mask s, int element) { return (s >> (element - 1)) & 1u; }
constexpr int set_size(Mask s) { return std::popcount(s); }

// min/max of a non-empty set
inline int min_element(Mask s) { return std::countr_zero(s) + 1; }
inline int max_element(Mask s) { return std::bit_width(s); }

// x < s / x > s in the elementwise sense; vacuously true for empty s
inline bool below_all(int x, Mask s) { return s == 0 || x < min_element(s); }
inline bool above_all(int x, Mask s) { return s == 0 || x > max_element(s); }

// closed interval {lo,...,hi} as a mask (empty when hi < lo)
inline Mask interval_mask(int lo, int hi) {
  return hi < lo ? Mask{0} : full_mask(hi) & ~full_mask(lo - 1);
}

// Visits every subset of m exactly once, starting with m itself and ending
// with the empty set.
template <typename F>
void for_each_subset(Mask m, F&& fn) {
  Mask s = m;
  for (;;) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

std::vector<int> elements(Mask s);

// "1,3" for {1,3}; "-" for the empty set
std::string set_to_string(Mask s);

}  // namespace acs
