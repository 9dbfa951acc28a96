#include "switchscan/counting.hpp"

#include <cmath>
#include <numeric>

namespace switchscan {

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

bool all_cycles_even(const CycleStats& cs) {
  for (int len : cs.cycle_lengths)
    if (len % 2 != 0) return false;
  return true;
}

BigInt fix_W_from(const CycleStats& cs) {
  BigInt v = pow2(cs.orb - 1);
  return all_cycles_even(cs) ? v * 2 : v;
}

bool is_power_of_two(std::uint64_t m) { return m != 0 && (m & (m - 1)) == 0; }

BigInt exact_quotient(const BigInt& sum, const BigInt& order, const char* what) {
  if (sum % order != 0) throw std::logic_error(std::string(what) + ": Burnside sum not divisible by |G|");
  return sum / order;
}

}  // namespace

int smallest_prime_factor(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) return static_cast<int>(p);
  return static_cast<int>(m);
}

BigRational lemma_bound(const Permutation& g, int p) {
  const std::uint64_t ord = element_order(g);
  if (p < 2 || smallest_prime_factor(static_cast<std::uint64_t>(p)) != p) throw DomainError("lemma_bound: p must be prime");
  if (ord % static_cast<std::uint64_t>(p) != 0) throw DomainError("lemma_bound: p does not divide the order of g");
  const auto cs = cycle_stats(g);
  return BigRational(g.degree(), p) + BigRational(static_cast<long long>(p - 1) * cs.fix, p);
}

BigInt fixed_subsets(const Permutation& g) { return pow2(cycle_stats(g).orb); }

BigInt fix_W(const Permutation& g) { return fix_W_from(cycle_stats(g)); }

int orbits_on_pairs(const Permutation& g) {
  const auto lens = cycle_stats(g).cycle_lengths;
  int total = 0;
  for (std::size_t i = 0; i < lens.size(); ++i) {
    total += lens[i] / 2;
    for (std::size_t j = i + 1; j < lens.size(); ++j) total += std::gcd(lens[i], lens[j]);
  }
  return total;
}

BigInt orbits_on_powerset(const PermGroup& g, const Budget& budget) {
  BigInt sum = 0;
  g.for_each_element([&](const Permutation& x) { sum += fixed_subsets(x); }, budget.max_elements);
  return exact_quotient(sum, g.order(), "orbits on subsets");
}

BigInt orbits_on_switching_classes(const PermGroup& g, const Budget& budget) {
  BigInt sum = 0;
  g.for_each_element([&](const Permutation& x) { sum += fix_W(x); }, budget.max_elements);
  return exact_quotient(sum, g.order(), "orbits on W");
}

BigInt orbits_on_all_switching_classes(const PermGroup& g, const Budget& budget) {
  BigInt sum = 0;
  g.for_each_element(
      [&](const Permutation& x) {
        const BigInt graphs = pow2(orbits_on_pairs(x));
        const BigInt per_class = fix_W(x);
        if (graphs % per_class != 0) throw std::logic_error("fixed graphs not a multiple of fix_W");
        sum += graphs / per_class;
      },
      budget.max_elements);
  return exact_quotient(sum, g.order(), "orbits on switching classes");
}

OrbitCountReport orbit_report(const PermGroup& g, const Budget& budget) {
  BigInt subsets = 0, module = 0;
  g.for_each_element(
      [&](const Permutation& x) {
        const auto cs = cycle_stats(x);
        subsets += pow2(cs.orb);
        module += fix_W_from(cs);
      },
      budget.max_elements);
  OrbitCountReport r;
  r.group_order = g.order();
  r.orbits_on_powerset = exact_quotient(subsets, r.group_order, "orbits on subsets");
  r.orbits_on_module_W = exact_quotient(module, r.group_order, "orbits on W");
  r.self_complementary_orbits = 2 * r.orbits_on_module_W - r.orbits_on_powerset;
  if (r.self_complementary_orbits < 0) throw std::logic_error("negative self-complementary orbit count");
  return r;
}

Type2Report type2_inequality(const PermGroup& g, const Budget& budget) {
  const int n = g.degree();
  const BigInt& order = g.order();
  BigInt all = 0, g2 = 0;
  g.for_each_element(
      [&](const Permutation& x) {
        const auto cs = cycle_stats(x);
        const BigInt f = pow2(cs.orb);
        all += f;
        const std::uint64_t ord = element_order(x);
        if (ord > 1 && is_power_of_two(ord) && cs.fix == 0) g2 += f;
      },
      budget.max_elements);
  Type2Report r;
  r.lhs = BigRational(pow2(n), order);
  r.rhs = (BigRational(all, order) + BigRational(g2)) / 2;
  r.holds = r.lhs <= r.rhs;

  const double log_order = std::log2(order.convert_to<double>());
  const double a = 11.0 * n / 14.0 + log_order;
  const double b = n / 2.0 + 2.0 * log_order;
  const double hi = std::max(a, b), lo = std::min(a, b);
  r.relaxed_lhs_log2 = n;
  r.relaxed_rhs_log2 = hi + std::log2(1.0 + std::exp2(lo - hi));
  r.relaxed_holds = r.relaxed_lhs_log2 <= r.relaxed_rhs_log2;
  return r;
}

std::pair<BigInt, BigInt> maroti_bound(int n) {
  if (n < 2) throw DomainError("maroti_bound needs n >= 2");
  const int k = std::bit_width(static_cast<unsigned>(n)) - 1;
  BigInt product = n;
  for (int i = 0; i < k; ++i) product *= n - (1 << i);
  BigInt power = 1;
  for (int i = 0; i < 1 + k; ++i) power *= n;
  return {product, power};
}

std::optional<Mask> regular_subset_orbit(const PermGroup& g, int max_size, const Budget& budget) {
  const int n = g.degree();
  if (n > 24 || (std::uint64_t{1} << n) > budget.max_bitmap_bits)
    throw BudgetExceeded("regular_subset_orbit: 2^" + std::to_string(n) + " bitmap exceeds the budget");
  std::vector<std::uint64_t> fixed((std::size_t{1} << n) / 64 + 1, 0);
  auto mark = [&](Mask x) { fixed[x >> 6] |= std::uint64_t{1} << (x & 63); };

  // A subset fixed by some g != 1 is fixed by an element of prime order.
  g.for_each_element(
      [&](const Permutation& x) {
        const std::uint64_t ord = element_order(x);
        if (ord == 1 || smallest_prime_factor(ord) != static_cast<int>(ord)) return;
        std::vector<Mask> cycles;
        Mask seen = 0;
        for (int i = 0; i < n; ++i) {
          if (seen & bit(i)) continue;
          Mask c = 0;
          for (int j = i; !(c & bit(j)); j = x(j)) c |= bit(j);
          seen |= c;
          cycles.push_back(c);
        }
        Mask cur = 0;
        mark(cur);
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << cycles.size()); ++step) {
          cur ^= cycles[static_cast<std::size_t>(std::countr_zero(step))];
          mark(cur);
        }
      },
      budget.max_elements);

  for (Mask x = 0; x < (Mask{1} << n); ++x)
    if (!((fixed[x >> 6] >> (x & 63)) & 1U) && popcount(x) <= max_size) return x;
  return std::nullopt;
}

bool has_trivial_set_stabilizer(const PermGroup& g, Mask x, const Budget& budget) {
  bool trivial = true;
  g.for_each_element(
      [&](const Permutation& p) {
        if (trivial && !p.is_identity() && p.apply(x) == x) trivial = false;
      },
      budget.max_elements);
  return trivial;
}

const std::vector<SeressEntry>& seress_list() {
  static const std::vector<SeressEntry> list = {
      {5, 2, "D10", "d10"},
      {5, 3, "AGL(1,5)", "agl_1_5"},
      {6, 1, "PSL(2,5)", "psl_2_5"},
      {6, 2, "PGL(2,5)", "pgl_2_5"},
      {7, 4, "AGL(1,7)", "agl_1_7"},
      {7, 5, "PSL(3,2)", "psl_3_2"},
      {8, 2, "AGammaL(1,8)", "agaml_1_8"},
      {8, 4, "PSL(2,7)", "psl_2_7"},
      {8, 5, "PGL(2,7)", "pgl_2_7"},
      {8, 3, "AGL(3,2)", "agl_3_2"},
      {9, 2, "3^2.D8 = S3 wr S2", "s3wrs2"},
      {9, 5, "AGammaL(1,9)", "agaml_1_9"},
      {9, 6, "ASL(2,3)", "asl_2_3"},
      {9, 7, "AGL(2,3)", "agl_2_3"},
      {9, 8, "PSL(2,8)", "psl_2_8"},
      {9, 9, "PGammaL(2,8)", "pgaml_2_8"},
      {10, 2, "S5", "s5_on_pairs"},
      {10, 3, "PSL(2,9)", "psl_2_9"},
      {10, 5, "PSigmaL(2,9)", "psigmal_2_9"},
      {10, 4, "PGL(2,9)", "pgl_2_9"},
      {10, 6, "M10", "m10"},
      {10, 7, "PGammaL(2,9)", "pgaml_2_9"},
      {11, 1, "PSL(2,11)", "psl_2_11_on_11"},
      {11, 2, "M11", "m11"},
      {12, 4, "PGL(2,11)", "pgl_2_11"},
      {12, 1, "M11", "m11_on_12"},
      {12, 2, "M12", "m12"},
      {13, 7, "PSL(3,3)", "psl_3_3"},
      {14, 2, "PGL(2,13)", "pgl_2_13"},
      {15, 4, "PSL(4,2)", "psl_4_2"},
      {16, 12, "AGammaL(2,4)", "agaml_2_4"},
      {16, 17, "2^4.A6", "affine_a6_16"},
      {16, 16, "2^4.S6", "affine_sp4_2"},
      {16, 20, "2^4.A7", ""},
      {16, 11, "AGL(4,2)", "agl_4_2"},
      {17, 7, "PSL(2,16).2", "psl_2_16_2"},
      {17, 8, "PGammaL(2,16)", "pgaml_2_16"},
      {21, 7, "PGammaL(3,4)", "pgaml_3_4"},
      {22, 1, "M22", "m22"},
      {22, 2, "M22.2", ""},
      {23, 5, "M23", "m23"},
      {24, 1, "M24", "m24"},
      {32, 3, "AGL(5,2)", "agl_5_2"},
  };
  return list;
}

}  // namespace switchscan
