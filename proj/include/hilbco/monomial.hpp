#pragma once

// Monomial ideals in k[x_1..x_m]: lattice operations, colons, lengths and
// primary decomposition. Everything here is characteristic-free and exact.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "hilbco/error.hpp"

namespace hilbco {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial; also used for affine semigroup elements.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t vars) : e_(vars, 0) {}
  ExponentVector(std::initializer_list<Exponent> entries) : e_(entries) {}
  explicit ExponentVector(std::vector<Exponent> entries) : e_(std::move(entries)) {}

  static ExponentVector unit_vector(std::size_t vars, std::size_t i, Exponent power = 1);

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  std::span<const Exponent> entries() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::uint64_t degree() const noexcept;
  Exponent max_entry() const noexcept;
  bool is_zero() const noexcept;
  /// Index of the only non-zero entry, or -1 if there are zero or several.
  int pure_power_variable() const noexcept;

  /// Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const ExponentVector& other) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
  /// max(a - b, 0) componentwise: the generator of (a) : b.
  friend ExponentVector saturating_sub(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> e_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

/// Monomial ideal given by its minimal generators, kept sorted
/// lexicographically. No generators is the zero ideal; the single zero
/// vector is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t ambient_vars = 1);
  MonomialIdeal(std::size_t ambient_vars, std::vector<ExponentVector> gens);

  static MonomialIdeal zero(std::size_t vars) { return MonomialIdeal(vars); }
  static MonomialIdeal unit(std::size_t vars);
  /// The maximal ideal (x_1, ..., x_m).
  static MonomialIdeal maximal(std::size_t vars);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  std::uint64_t max_generator_degree() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t ambient_;
  std::vector<ExponentVector> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

/// A prime monomial ideal, stored as the sorted indices of its variables.
using MonomialPrime = std::vector<std::size_t>;

struct PrimaryComponent {
  MonomialPrime prime;
  MonomialIdeal ideal;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

struct PrimaryDecomposition {
  std::vector<PrimaryComponent> components;
};

struct UnmixedComponent {
  /// Ambient lift of U_R(0); equals the input ideal when `is_zero`.
  MonomialIdeal lift;
  /// True when every associated prime has maximal dimension, so U = 0.
  bool is_zero = false;
};

MonomialIdeal minimalize(std::size_t ambient_vars, std::vector<ExponentVector> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& divisor);
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor);
/// I : J^infinity.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);

bool contains(const MonomialIdeal& ideal, const ExponentVector& monomial);
bool contains(const MonomialIdeal& ideal, const MonomialIdeal& other);

bool is_artinian_colength(const MonomialIdeal& ideal);

/// Number of standard monomials of an Artinian ideal. Dispatches between
/// the two exact counting routes below.
Integer colength(const MonomialIdeal& ideal);
/// Column-compressed enumeration of the standard-monomial box.
Integer colength_by_box(const MonomialIdeal& ideal);
/// Inclusion-exclusion over generator subsets, evaluated by the recursive
/// lcm pivot with memoization.
Integer colength_by_inclusion_exclusion(const MonomialIdeal& ideal);

/// Length of J/I for monomial ideals I <= J.
Integer nested_length(const MonomialIdeal& inner, const MonomialIdeal& outer);

PrimaryDecomposition primary_decompose(const MonomialIdeal& ideal);
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);
/// Krull dimension of k[x]/I.
std::size_t dimension(const MonomialIdeal& ideal);
UnmixedComponent unmixed_component(const MonomialIdeal& ideal);

/// Monomial primary test: every variable occurring in a minimal generator
/// has a pure power in the ideal.
bool is_primary(const MonomialIdeal& ideal);
/// Variables occurring in some minimal generator; the radical of a primary ideal.
MonomialPrime support_variables(const MonomialIdeal& ideal);

}  // namespace hilbco
