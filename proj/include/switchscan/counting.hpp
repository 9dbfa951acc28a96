#pragma once

// Fixed-point counts and Burnside orbit counts for a permutation group acting
// on subsets, on the switching module W = F_2^n / <all-ones>, and on switching
// classes. All sums are exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "switchscan/perm.hpp"

namespace switchscan {

using BigRational = boost::multiprecision::cpp_rational;

/// n/p + (p-1)/p * fix(g); orb(g) never exceeds it. p must be a prime
/// dividing the order of g.
BigRational lemma_bound(const Permutation& g, int p);
int smallest_prime_factor(std::uint64_t m);

/// 2^orb(g): subsets X with X^g = X.
BigInt fixed_subsets(const Permutation& g);

/// Vectors of W fixed by g: 2^(orb-1), doubled when every cycle has even length.
BigInt fix_W(const Permutation& g);

/// Orbits of g on unordered pairs, from the cycle type.
int orbits_on_pairs(const Permutation& g);

BigInt orbits_on_powerset(const PermGroup& g, const Budget& budget = Budget::from_env());

/// Burnside average of fix_W: the number of G-orbits on W, i.e. on the
/// switchings of one G-invariant class.
BigInt orbits_on_switching_classes(const PermGroup& g, const Budget& budget = Budget::from_env());

/// G-orbits on all 2^(C(n,2)) / 2^(n-1) switching classes of graphs on n
/// points: (1/|G|) * sum 2^orb_pairs(g) / fix_W(g). For Sym(n) this is the
/// number of switching classes up to isomorphism.
BigInt orbits_on_all_switching_classes(const PermGroup& g, const Budget& budget = Budget::from_env());

struct OrbitCountReport {
  BigInt orbits_on_powerset;
  BigInt orbits_on_module_W;
  BigInt self_complementary_orbits;
  BigInt group_order;
};

OrbitCountReport orbit_report(const PermGroup& g, const Budget& budget = Budget::from_env());

/// Necessary condition for a group with no regular orbit on a switching class:
///   2^n/|G| <= (1/2) (sum_G 2^orb / |G| + sum_{G2} 2^orb),
/// G2 = elements of 2-power order > 1 without fixed points. `relaxed_*` is the
/// coarser 2^n <= 2^(11n/14)|G| + 2^(n/2)|G|^2, compared in log2.
struct Type2Report {
  BigRational lhs;
  BigRational rhs;
  bool holds = false;
  double relaxed_lhs_log2 = 0;
  double relaxed_rhs_log2 = 0;
  bool relaxed_holds = false;
};

Type2Report type2_inequality(const PermGroup& g, const Budget& budget = Budget::from_env());

/// {n * prod_{i < floor(log2 n)} (n - 2^i),  n^(1 + floor(log2 n))}.
std::pair<BigInt, BigInt> maroti_bound(int n);

/// Least X (as an integer bitmask) with trivial setwise stabiliser and at most
/// `max_size` points, or nullopt. Uses a 2^n bitmap; refuses with
/// BudgetExceeded beyond the bitmap budget or n > 24.
std::optional<Mask> regular_subset_orbit(const PermGroup& g, int max_size = kMaxDegree,
                                         const Budget& budget = Budget::from_env());

/// Only stabiliser of X in G is the identity (direct check over the group).
bool has_trivial_set_stabilizer(const PermGroup& g, Mask x, const Budget& budget = Budget::from_env());

struct SeressEntry {
  int degree;
  int gap_id;
  std::string_view name;
  std::string_view catalog;  // empty when the group is not in the catalog
};

/// Primitive groups, other than alternating and symmetric, with no regular
/// orbit on the power set (GAP 4.7 primitive-group numbering).
const std::vector<SeressEntry>& seress_list();

}  // namespace switchscan
