#pragma once

// Affine semigroup rings k[[S]] for finitely generated S in N^m. Ideals are
// generated by elements of S; lengths are counted by lattice-point
// enumeration over a box, certified by recounting over a doubled box.

#include <cstdint>
#include <vector>

#include "hilbco/monomial.hpp"

namespace hilbco {

class AffineSemigroup {
 public:
  AffineSemigroup(std::size_t ambient_dim, std::vector<ExponentVector> generators);

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  Exponent max_generator_entry() const noexcept;
  /// Rank of the group generated by S.
  std::size_t rank() const;

  friend bool operator==(const AffineSemigroup&, const AffineSemigroup&) = default;

 private:
  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

/// Dense membership table for S over the box [0, side]^m.
class MembershipTable {
 public:
  MembershipTable(const AffineSemigroup& s, Exponent side);

  Exponent side() const noexcept { return side_; }
  /// `v` must lie inside the box.
  bool contains(const ExponentVector& v) const;

 private:
  std::size_t index(const ExponentVector& v) const;

  Exponent side_;
  std::vector<std::uint8_t> cells_;
};

bool sg_membership(const AffineSemigroup& s, const ExponentVector& v, Exponent bound);

class SemigroupIdeal {
 public:
  /// Validates membership of every generator and reduces to an antichain
  /// under a <= b iff b - a in S.
  SemigroupIdeal(AffineSemigroup s, std::vector<ExponentVector> gens);

  static SemigroupIdeal unit(const AffineSemigroup& s);

  const AffineSemigroup& semigroup() const noexcept { return s_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  Exponent max_generator_entry() const noexcept;
  bool is_unit() const noexcept;

  friend bool operator==(const SemigroupIdeal&, const SemigroupIdeal&) = default;

 private:
  struct Reduced {};
  SemigroupIdeal(AffineSemigroup s, std::vector<ExponentVector> gens, Reduced)
      : s_(std::move(s)), gens_(std::move(gens)) {}

  AffineSemigroup s_;
  std::vector<ExponentVector> gens_;
};

SemigroupIdeal sg_ideal_product(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal sg_ideal_power(const SemigroupIdeal& ideal, unsigned n);
bool sg_contains(const SemigroupIdeal& ideal, const ExponentVector& element);
bool sg_contains(const SemigroupIdeal& ideal, const SemigroupIdeal& other);

struct SemigroupCount {
  Integer count;
  bool certified = false;
  /// Box side of the last count compared.
  Exponent bound = 0;
};

/// Number of elements of S outside the ideal within [0, bound]^m, recounted
/// at successive doublings; certified once two consecutive counts agree.
/// `retries` extra doublings are attempted after a first disagreement.
SemigroupCount sg_colength(const SemigroupIdeal& ideal, Exponent bound, int retries = 1);
/// Single uncertified count over [0, bound]^m.
Integer sg_count_outside(const SemigroupIdeal& ideal, Exponent bound);

/// Default box side for lengths of ideal: 40 * (largest generator entry of
/// the ideal + largest entry of a semigroup generator).
Exponent sg_default_bound(const SemigroupIdeal& ideal);

}  // namespace hilbco
