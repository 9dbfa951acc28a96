#pragma once

// Permutations on {0..n-1} (n <= 63) and permutation groups held as a
// stabilizer chain. Composition acts left to right: compose(p, q) sends i to
// q(p(i)), so X^(pq) = (X^p)^q.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchscan/subsets.hpp"

namespace switchscan {

using BigInt = boost::multiprecision::cpp_int;

/// Bad input: malformed files, mismatched degrees, unknown names.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was refused because it would exceed a configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::uint64_t max_elements = 10'000'000;
  std::uint64_t max_bitmap_bits = std::uint64_t{1} << 24;

  /// Defaults, overridden by SWITCHSCAN_BUDGET when set.
  static Budget from_env();
};

class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `images` is a bijection on {0..n-1}, 1 <= n <= 63.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int n);
  /// Builds from 0-based disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation from_images(const std::vector<int>& images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint8_t> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  Mask apply(Mask set) const;
  /// Smallest point moved, or -1 for the identity.
  int first_moved() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);

struct CycleStats {
  int orb = 0;
  int fix = 0;
  std::vector<int> cycle_lengths;  // sorted ascending
};

CycleStats cycle_stats(const Permutation& p);

/// Order of p as an element, i.e. the lcm of its cycle lengths.
std::uint64_t element_order(const Permutation& p);

std::string to_cycle_string(const Permutation& p);  // 1-based, "()" for identity

struct StabilizerChain;

struct PrimitivityReport {
  bool transitive = false;
  bool primitive = false;
  std::vector<int> block;  // a nontrivial block when transitive but imprimitive
};

/// Partition of all 3-subsets of {0..n-1} into group orbits. Orbits are
/// listed in increasing order of their smallest colex rank.
struct TripleOrbits {
  int n = 0;
  std::vector<std::uint32_t> orbit_of;             // indexed by triple rank
  std::vector<std::vector<std::uint32_t>> orbits;  // ranks, ascending

  std::size_t size() const { return orbits.size(); }
};

class ElementCursor;

/// Immutable permutation group. The stabilizer chain uses the base
/// 0, 1, ..., n-1 and keeps only levels with a nontrivial basic orbit, so each
/// retained base point is the smallest point moved by its stabilizer.
class PermGroup {
 public:
  /// Empty `gens` gives the trivial group of the given degree.
  PermGroup(int degree, std::vector<Permutation> gens);
  static PermGroup from_generators(std::vector<Permutation> gens);
  static PermGroup symmetric(int n);
  static PermGroup trivial(int n) { return PermGroup(n, {}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const BigInt& order() const;
  bool contains(const Permutation& p) const;
  std::vector<int> base() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

  Mask orbit_of_point(int point) const;
  std::vector<Mask> orbit_of_set(Mask seed) const;  // sorted ascending
  std::vector<Mask> point_orbits() const;           // ordered by smallest point
  bool is_transitive() const;
  PrimitivityReport primitivity() const;
  bool is_primitive() const { return primitivity().primitive; }
  TripleOrbits orbits_on_triples() const;

  /// Refuses with BudgetExceeded when the order exceeds `max_elements`.
  ElementCursor elements(std::uint64_t max_elements = Budget{}.max_elements) const;
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t max_elements = Budget{}.max_elements) const;
  std::uint64_t order_u64() const;  // throws BudgetExceeded if it does not fit

 private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabilizerChain> chain_;

  friend class ElementCursor;
};

/// Walks every group element exactly once, identity first. Independent of
/// other cursors on the same group.
class ElementCursor {
 public:
  explicit ElementCursor(const PermGroup& g);
  std::optional<Permutation> next();

 private:
  std::shared_ptr<const StabilizerChain> chain_;
  std::vector<std::size_t> levels_;  // chain levels with nontrivial orbit
  std::vector<std::vector<const Permutation*>> reps_;
  std::vector<std::size_t> digits_;
  std::vector<Permutation> partial_;  // partial_[i] = product for levels i..end
  bool started_ = false;
  bool done_ = false;
  int degree_ = 0;

  void rebuild_from(std::size_t i);
};

/// Image of a triple-rank set under p (used for invariance checks).
std::uint32_t apply_to_triple(const Permutation& p, std::uint32_t rank);

}  // namespace switchscan
