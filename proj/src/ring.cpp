#include "hilbco/ring.hpp"

#include <algorithm>
#include <set>

namespace hilbco {

namespace {

void require_same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw InputError("ideals belong to different rings");
}

}  // namespace

RingPresentation::RingPresentation(std::vector<std::string> variables, MonomialIdeal relations)
    : data_(MonomialQuotient{std::move(variables), std::move(relations)}) {
  const auto& q = std::get<MonomialQuotient>(data_);
  if (q.variables.empty()) throw InputError("ring needs at least one variable");
  if (q.variables.size() != q.relations.ambient())
    throw AmbientMismatch(q.variables.size(), q.relations.ambient());
  std::set<std::string> names;
  for (const auto& v : q.variables)
    if (v.empty() || !names.insert(v).second)
      throw InputError("variable names must be non-empty and distinct");
  if (q.relations.is_unit()) throw InputError("defining ideal must be proper");
}

RingPresentation::RingPresentation(AffineSemigroup semigroup) : data_(std::move(semigroup)) {}

const MonomialQuotient& RingPresentation::monomial() const {
  if (!is_monomial()) throw UnsupportedOperation("operation requires the monomial backend");
  return std::get<MonomialQuotient>(data_);
}

const AffineSemigroup& RingPresentation::semigroup() const {
  if (!is_semigroup()) throw UnsupportedOperation("operation requires the semigroup backend");
  return std::get<AffineSemigroup>(data_);
}

std::size_t RingPresentation::ambient() const {
  return is_monomial() ? monomial().relations.ambient() : semigroup().ambient_dim();
}

RingPtr make_ring(RingPresentation ring) {
  return std::make_shared<const RingPresentation>(std::move(ring));
}

// ---------------------------------------------------------------------------

IdealHandle::IdealHandle(RingPtr ring, const std::vector<ExponentVector>& gens)
    : ring_(std::move(ring)), ideal_(MonomialIdeal(1)) {
  if (ring_->is_monomial()) {
    const auto& i0 = ring_->monomial().relations;
    ideal_ = hilbco::sum(i0, MonomialIdeal(i0.ambient(), gens));
  } else {
    ideal_ = SemigroupIdeal(ring_->semigroup(), gens);
  }
}

IdealHandle::IdealHandle(RingPtr ring, MonomialIdeal lift)
    : ring_(std::move(ring)), ideal_(MonomialIdeal(1)) {
  ideal_ = hilbco::sum(ring_->monomial().relations, lift);
}

IdealHandle::IdealHandle(RingPtr ring, SemigroupIdeal ideal)
    : ring_(std::move(ring)), ideal_(std::move(ideal)) {
  if (!(ring_->semigroup() == std::get<SemigroupIdeal>(ideal_).semigroup()))
    throw InputError("semigroup mismatch");
}

IdealHandle IdealHandle::unit(RingPtr ring) {
  if (ring->is_monomial()) {
    const std::size_t m = ring->ambient();
    return IdealHandle(std::move(ring), MonomialIdeal::unit(m));
  }
  auto s = SemigroupIdeal::unit(ring->semigroup());
  return IdealHandle(std::move(ring), std::move(s));
}

IdealHandle IdealHandle::maximal(RingPtr ring) {
  if (ring->is_monomial()) {
    const std::size_t m = ring->ambient();
    return IdealHandle(std::move(ring), MonomialIdeal::maximal(m));
  }
  return IdealHandle(ring, ring->semigroup().generators());
}

const MonomialIdeal& IdealHandle::lift() const {
  if (!ring_->is_monomial()) throw UnsupportedOperation("operation requires the monomial backend");
  return std::get<MonomialIdeal>(ideal_);
}

const SemigroupIdeal& IdealHandle::semigroup_ideal() const {
  if (!ring_->is_semigroup()) throw UnsupportedOperation("operation requires the semigroup backend");
  return std::get<SemigroupIdeal>(ideal_);
}

std::vector<ExponentVector> IdealHandle::minimal_generators() const {
  if (ring_->is_semigroup()) return semigroup_ideal().generators();
  const auto& i0 = ring_->monomial().relations;
  std::vector<ExponentVector> gens;
  for (const auto& g : lift().generators())
    if (!hilbco::contains(i0, g)) gens.push_back(g);
  return gens;
}

std::uint64_t IdealHandle::max_generator_degree() const {
  std::uint64_t d = 0;
  if (ring_->is_semigroup()) return semigroup_ideal().max_generator_entry();
  for (const auto& g : minimal_generators()) d = std::max(d, g.degree());
  return d;
}

bool operator==(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.ideal_ == b.ideal_;
}

// ---------------------------------------------------------------------------

IdealHandle product(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  if (a.ring()->is_semigroup())
    return IdealHandle(a.ring(), sg_ideal_product(a.semigroup_ideal(), b.semigroup_ideal()));
  return IdealHandle(a.ring(), product(a.lift(), b.lift()));
}

IdealHandle power(const IdealHandle& ideal, unsigned n) {
  if (ideal.ring()->is_semigroup())
    return IdealHandle(ideal.ring(), sg_ideal_power(ideal.semigroup_ideal(), n));
  return IdealHandle(ideal.ring(), power(ideal.lift(), n));
}

IdealHandle sum(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  if (a.ring()->is_semigroup()) {
    auto gens = a.semigroup_ideal().generators();
    const auto& more = b.semigroup_ideal().generators();
    gens.insert(gens.end(), more.begin(), more.end());
    return IdealHandle(a.ring(), gens);
  }
  return IdealHandle(a.ring(), sum(a.lift(), b.lift()));
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  return IdealHandle(a.ring(), intersect(a.lift(), b.lift()));
}

IdealHandle colon(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  return IdealHandle(a.ring(), colon(a.lift(), b.lift()));
}

bool contains(const IdealHandle& big, const IdealHandle& small) {
  require_same_ring(big, small);
  if (big.ring()->is_semigroup()) return sg_contains(big.semigroup_ideal(), small.semigroup_ideal());
  return contains(big.lift(), small.lift());
}

bool contains(const IdealHandle& ideal, const ExponentVector& element) {
  if (ideal.ring()->is_semigroup()) return sg_contains(ideal.semigroup_ideal(), element);
  return contains(ideal.lift(), element);
}

// ---------------------------------------------------------------------------

std::size_t ring_dimension(const RingPresentation& ring) {
  if (ring.is_semigroup()) return ring.semigroup().rank();
  return dimension(ring.monomial().relations);
}

LengthReading quotient_length_reading(const IdealHandle& ideal, const LengthOptions& options) {
  if (ideal.ring()->is_monomial()) {
    if (!is_artinian_colength(ideal.lift()))
      throw InfiniteLength("ideal is not m-primary: R/I has infinite length");
    return {colength(ideal.lift()), true};
  }
  const auto& s = ideal.semigroup_ideal();
  const Exponent bound = options.semigroup_bound.value_or(sg_default_bound(s));
  auto count = sg_colength(s, bound, options.certification_retries);
  return {std::move(count.count), count.certified};
}

Integer length_of_quotient(const IdealHandle& ideal, const LengthOptions& options) {
  auto reading = quotient_length_reading(ideal, options);
  if (!reading.certified)
    throw UncertifiedCount("semigroup length count did not stabilize under box doubling");
  return reading.value;
}

LengthReading LengthCache::reading(const IdealHandle& ideal) {
  if (ideal.ring()->is_monomial()) {
    if (auto it = monomial_.find(ideal.lift()); it != monomial_.end()) return it->second;
    auto r = quotient_length_reading(ideal, options_);
    monomial_.emplace(ideal.lift(), r);
    return r;
  }
  const auto& key = ideal.semigroup_ideal().generators();
  if (auto it = semigroup_.find(key); it != semigroup_.end()) return it->second;
  auto r = quotient_length_reading(ideal, options_);
  semigroup_.emplace(key, r);
  return r;
}

bool is_m_primary(const IdealHandle& ideal, const LengthOptions& options) {
  if (ideal.ring()->is_monomial()) return is_artinian_colength(ideal.lift());
  return quotient_length_reading(ideal, options).certified;
}

bool is_parameter_ideal(const IdealHandle& q, const LengthOptions& options) {
  if (!is_m_primary(q, options)) return false;
  return q.minimal_generators().size() == ring_dimension(*q.ring());
}

RingPresentation reduce_mod_element(const RingPresentation& ring, const ExponentVector& x) {
  if (ring.is_semigroup())
    throw UnsupportedOperation("reduction modulo an element needs the monomial backend");
  const auto& q = ring.monomial();
  if (x.size() != q.relations.ambient()) throw AmbientMismatch(q.relations.ambient(), x.size());
  if (x.is_zero()) throw InputError("cannot reduce modulo a unit");
  return RingPresentation(q.variables, sum(q.relations, MonomialIdeal(x.size(), {x})));
}

IdealHandle push_forward(const IdealHandle& ideal, RingPtr target) {
  if (target->ambient() != ideal.ring()->ambient())
    throw AmbientMismatch(target->ambient(), ideal.ring()->ambient());
  return IdealHandle(std::move(target), ideal.lift());
}

Integer torsion_length(const RingPresentation& ring, const ExponentVector& x) {
  const auto& i0 = ring.monomial().relations;
  if (x.size() != i0.ambient()) throw AmbientMismatch(i0.ambient(), x.size());
  try {
    return nested_length(i0, colon(i0, x));
  } catch (const InfiniteLength&) {
    throw InfiniteLength("0 : x has infinite length");
  }
}

MonomialIdeal local_cohomology_zero_lift(const RingPresentation& ring) {
  const auto& i0 = ring.monomial().relations;
  return saturate(i0, MonomialIdeal::maximal(i0.ambient()));
}

Integer h0_length_of_ideal(const IdealHandle& k) {
  const auto& i0 = k.ring()->monomial().relations;
  return nested_length(i0, intersect(k.lift(), local_cohomology_zero_lift(*k.ring())));
}

}  // namespace hilbco
