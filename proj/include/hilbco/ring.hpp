#pragma once

// A uniform facade over the two ring backends. Ideals of a monomial
// quotient k[x]/I0 are stored as ambient lifts containing I0, so equality
// of ideals of R is equality of lifted minimal generators.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hilbco/monomial.hpp"
#include "hilbco/semigroup.hpp"

namespace hilbco {

struct MonomialQuotient {
  std::vector<std::string> variables;
  /// Defining ideal I0; must be proper.
  MonomialIdeal relations;

  friend bool operator==(const MonomialQuotient&, const MonomialQuotient&) = default;
};

class RingPresentation {
 public:
  /// k[x_1..x_m] / relations.
  RingPresentation(std::vector<std::string> variables, MonomialIdeal relations);
  explicit RingPresentation(AffineSemigroup semigroup);

  bool is_monomial() const noexcept { return std::holds_alternative<MonomialQuotient>(data_); }
  bool is_semigroup() const noexcept { return !is_monomial(); }
  const MonomialQuotient& monomial() const;
  const AffineSemigroup& semigroup() const;

  /// Number of ambient variables (monomial) or the ambient lattice rank
  /// (semigroup).
  std::size_t ambient() const;

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

 private:
  std::variant<MonomialQuotient, AffineSemigroup> data_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_ring(RingPresentation ring);

/// An ideal of a presented ring.
class IdealHandle {
 public:
  /// Monomial backend: `gens` are ambient monomials; I0 is added.
  IdealHandle(RingPtr ring, const std::vector<ExponentVector>& gens);
  IdealHandle(RingPtr ring, MonomialIdeal lift);
  IdealHandle(RingPtr ring, SemigroupIdeal ideal);

  static IdealHandle unit(RingPtr ring);
  /// The maximal ideal of the local ring.
  static IdealHandle maximal(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialIdeal& lift() const;
  const SemigroupIdeal& semigroup_ideal() const;

  /// Generators that are minimal in R: lifted minimal generators not in I0
  /// (monomial), or the S-divisibility antichain (semigroup).
  std::vector<ExponentVector> minimal_generators() const;
  /// Largest generator degree (monomial) or entry (semigroup).
  std::uint64_t max_generator_degree() const;

  friend bool operator==(const IdealHandle& a, const IdealHandle& b);

 private:
  RingPtr ring_;
  std::variant<MonomialIdeal, SemigroupIdeal> ideal_;
};

IdealHandle product(const IdealHandle& a, const IdealHandle& b);
IdealHandle power(const IdealHandle& ideal, unsigned n);
IdealHandle sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);
IdealHandle colon(const IdealHandle& a, const IdealHandle& b);
bool contains(const IdealHandle& big, const IdealHandle& small);
/// True when the element (ambient monomial or semigroup vector) lies in the ideal.
bool contains(const IdealHandle& ideal, const ExponentVector& element);

struct LengthOptions {
  /// Semigroup box side; defaults to sg_default_bound.
  std::optional<Exponent> semigroup_bound;
  int certification_retries = 1;
};

struct LengthReading {
  Integer value;
  bool certified = true;
};

/// Memo of quotient lengths keyed by ideal; shared across one analysis.
class LengthCache {
 public:
  explicit LengthCache(LengthOptions options = {}) : options_(std::move(options)) {}

  const LengthOptions& options() const noexcept { return options_; }
  LengthReading reading(const IdealHandle& ideal);

 private:
  LengthOptions options_;
  std::map<MonomialIdeal, LengthReading> monomial_;
  std::map<std::vector<ExponentVector>, LengthReading> semigroup_;
};

std::size_t ring_dimension(const RingPresentation& ring);

bool is_m_primary(const IdealHandle& ideal, const LengthOptions& options = {});

/// l(R/I) with its certification flag.
LengthReading quotient_length_reading(const IdealHandle& ideal, const LengthOptions& options = {});
/// l(R/I); throws UncertifiedCount for uncertified semigroup counts.
Integer length_of_quotient(const IdealHandle& ideal, const LengthOptions& options = {});

bool is_parameter_ideal(const IdealHandle& q, const LengthOptions& options = {});

/// R / (x); monomial backend only.
RingPresentation reduce_mod_element(const RingPresentation& ring, const ExponentVector& x);
/// Pushes an ideal of R forward to another monomial presentation over the
/// same ambient variables.
IdealHandle push_forward(const IdealHandle& ideal, RingPtr target);

/// l(0 :_R x) = l((I0 : x) / I0).
Integer torsion_length(const RingPresentation& ring, const ExponentVector& x);
/// The ideal H^0_m(R) = (I0 : m^infinity) / I0, as a lift.
MonomialIdeal local_cohomology_zero_lift(const RingPresentation& ring);
/// l(H^0_m(K)) = l(K cap H^0_m(R)).
Integer h0_length_of_ideal(const IdealHandle& k);

}  // namespace hilbco
