#pragma once

// Colexicographic ranking of small subsets of {0..n-1}, n <= 63.
//   rank{a<b}     = C(b,2) + a
//   rank{a<b<c}   = C(c,3) + C(b,2) + a
//   rank{a<b<c<d} = C(d,4) + C(c,3) + C(b,2) + a

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace switchscan {

inline constexpr int kMaxDegree = 63;

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }

std::uint64_t binomial(int n, int k);

inline std::uint32_t rank_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint32_t>(b * (b - 1) / 2 + a);
}

std::uint32_t rank_triple(int a, int b, int c);
std::array<int, 3> unrank_triple(std::uint32_t rank);
std::array<int, 2> unrank_pair(std::uint32_t rank);

inline std::uint32_t triple_count(int n) { return static_cast<std::uint32_t>(binomial(n, 3)); }

// Visits every k-subset of {0..n-1} as a bitmask, in colex order.
template <class F>
void for_each_k_subset(int n, int k, F&& fn) {
  if (k > n || k < 0) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  Mask s = low_mask(k);
  const Mask limit = bit(n);
  while (s < limit) {
    fn(s);
    // Gosper's hack: next larger integer with the same popcount.
    Mask c = s & (~s + 1);
    Mask r = s + c;
    if (r == 0 || r >= limit) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

std::vector<int> mask_to_points(Mask m);
Mask points_to_mask(const std::vector<int>& pts);

}  // namespace switchscan
