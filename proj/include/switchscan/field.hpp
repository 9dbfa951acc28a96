#pragma once

// Small finite fields GF(p^k) with p^k <= 64, as lookup tables, and the
// permutation groups they give on projective and affine spaces.
//
// An element is the integer c0 + c1 p + ... + c_{k-1} p^{k-1}, the residue
// c0 + c1 x + ... modulo a fixed irreducible polynomial. In GF(9) = GF(3)[i],
// i^2 = -1, the element a + b i is therefore a + 3b.

#include <vector>

#include "switchscan/perm.hpp"

namespace switchscan {

class SmallField {
 public:
  /// q must be a prime power with a built-in modulus (2..64).
  static const SmallField& get(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int inv(int a) const;  // DomainError on 0
  int pow(int a, int e) const;
  int frobenius(int a) const { return pow(a, p_); }
  bool is_square(int a) const { return square_[static_cast<std::size_t>(a)]; }
  int primitive_element() const { return primitive_; }

 private:
  SmallField(int p, int k, std::vector<int> modulus);
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }

  int q_, p_, k_;
  int primitive_ = 0;
  std::vector<int> add_, mul_, neg_;
  std::vector<bool> square_;
};

/// A semilinear map v -> frob^f(v) * m on row vectors of length d.
struct SemilinearMap {
  std::vector<int> matrix;  // d*d, row-major
  int frobenius_power = 0;
};

/// Points of PG(d-1, q): vectors whose last nonzero coordinate is 1, ordered
/// by the position of that coordinate (highest first), then by the remaining
/// coordinates read as a little-endian base-q number. For d = 2 the point
/// (x, 1) has index x and (1, 0) = infinity has index q.
std::vector<std::vector<int>> projective_points(int d, const SmallField& f);

/// Affine points: index sum v_i q^i.
std::vector<std::vector<int>> affine_points(int d, const SmallField& f);

/// Elementary transvections with entries from an additive basis: generate SL(d, q).
std::vector<SemilinearMap> sl_generators(int d, const SmallField& f);
SemilinearMap diagonal_map(int d, const SmallField& f, int first_entry);
SemilinearMap frobenius_map(int d);

PermGroup projective_group(int d, const SmallField& f, const std::vector<SemilinearMap>& maps);

/// Translations by all basis vectors (times an additive basis of the field)
/// together with the given maps acting on vectors.
PermGroup affine_group(int d, const SmallField& f, const std::vector<SemilinearMap>& maps);

}  // namespace switchscan
