#include "switchscan/subsets.hpp"

#include <stdexcept>

namespace switchscan {

namespace {

struct BinomialTable {
  std::uint64_t c[65][65]{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 64) return 0;
  return table().c[n][k];
}

std::uint32_t rank_triple(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  if (a == b || b == c) throw std::invalid_argument("rank_triple: points must be distinct");
  const auto& t = table();
  return static_cast<std::uint32_t>(t.c[c][3] + t.c[b][2] + a);
}

std::array<int, 3> unrank_triple(std::uint32_t rank) {
  const auto& t = table();
  int c = 2;
  while (t.c[c + 1][3] <= rank) ++c;
  rank -= static_cast<std::uint32_t>(t.c[c][3]);
  int b = 1;
  while (t.c[b + 1][2] <= rank) ++b;
  rank -= static_cast<std::uint32_t>(t.c[b][2]);
  return {static_cast<int>(rank), b, c};
}

std::array<int, 2> unrank_pair(std::uint32_t rank) {
  int b = 1;
  while (static_cast<std::uint32_t>((b + 1) * b / 2) <= rank) ++b;
  return {static_cast<int>(rank - b * (b - 1) / 2), b};
}

std::vector<int> mask_to_points(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask points_to_mask(const std::vector<int>& pts) {
  Mask m = 0;
  for (int p : pts) m |= bit(p);
  return m;
}

}  // namespace switchscan
