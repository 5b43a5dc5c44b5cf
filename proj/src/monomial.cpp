#include "hilbco/monomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

namespace hilbco {

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
}

void require_same_ambient(const MonomialIdeal& a, const ExponentVector& v) {
  if (a.ambient() != v.size()) throw AmbientMismatch(a.ambient(), v.size());
}

// Smallest pure power of each variable in the ideal; 0 when absent.
std::vector<Exponent> pure_power_box(const MonomialIdeal& ideal) {
  std::vector<Exponent> box(ideal.ambient(), 0);
  for (const auto& g : ideal.generators()) {
    const int v = g.pure_power_variable();
    if (v < 0) continue;
    auto& slot = box[static_cast<std::size_t>(v)];
    if (slot == 0 || g[v] < slot) slot = g[v];
  }
  return box;
}

constexpr double kBoxEnumerationLimit = 1e7;

}  // namespace

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector ExponentVector::unit_vector(std::size_t vars, std::size_t i, Exponent power) {
  ExponentVector v(vars);
  v[i] = power;
  return v;
}

std::uint64_t ExponentVector::degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

Exponent ExponentVector::max_entry() const noexcept {
  return e_.empty() ? 0 : *std::max_element(e_.begin(), e_.end());
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

int ExponentVector::pure_power_variable() const noexcept {
  int found = -1;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector saturating_sub(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t ambient_vars) : ambient_(ambient_vars) {}

MonomialIdeal::MonomialIdeal(std::size_t ambient_vars, std::vector<ExponentVector> gens)
    : ambient_(ambient_vars) {
  for (const auto& g : gens)
    if (g.size() != ambient_vars) throw AmbientMismatch(ambient_vars, g.size());
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::unit(std::size_t vars) {
  return MonomialIdeal(vars, {ExponentVector(vars)});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t vars) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < vars; ++i) gens.push_back(ExponentVector::unit_vector(vars, i));
  return MonomialIdeal(vars, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_zero();
}

std::uint64_t MonomialIdeal::max_generator_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  os << '<';
  bool first = true;
  for (const auto& g : ideal.generators()) {
    os << (first ? "" : ", ") << g;
    first = false;
  }
  return os << '>';
}

// ---------------------------------------------------------------------------
// Lattice operations

MonomialIdeal minimalize(std::size_t ambient_vars, std::vector<ExponentVector> gens) {
  return MonomialIdeal(ambient_vars, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g + h);
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.ambient());
  MonomialIdeal base = ideal;
  while (n > 0) {
    if (n & 1u) result = product(result, base);
    n >>= 1;
    if (n > 0) base = product(base, base);
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& divisor) {
  require_same_ambient(ideal, divisor);
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(saturating_sub(g, divisor));
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
  require_same_ambient(ideal, divisor);
  if (divisor.is_zero()) throw InputError("colon by the zero ideal");
  auto it = divisor.generators().begin();
  MonomialIdeal result = colon(ideal, *it);
  for (++it; it != divisor.generators().end(); ++it) result = intersect(result, colon(ideal, *it));
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  MonomialIdeal current = ideal;
  while (true) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool contains(const MonomialIdeal& ideal, const ExponentVector& monomial) {
  require_same_ambient(ideal, monomial);
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVector& g) { return g.divides(monomial); });
}

bool contains(const MonomialIdeal& ideal, const MonomialIdeal& other) {
  require_same_ambient(ideal, other);
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const ExponentVector& g) { return contains(ideal, g); });
}

bool is_artinian_colength(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return true;
  const auto box = pure_power_box(ideal);
  return std::all_of(box.begin(), box.end(), [](Exponent b) { return b > 0; });
}

// ---------------------------------------------------------------------------
// Lengths

Integer colength(const MonomialIdeal& ideal) {
  if (!is_artinian_colength(ideal))
    throw InfiniteLength("colength of a non-Artinian monomial ideal is infinite");
  if (ideal.is_unit()) return 0;
  double volume = 1.0;
  for (Exponent b : pure_power_box(ideal)) volume *= b;
  return volume <= kBoxEnumerationLimit ? colength_by_box(ideal)
                                        : colength_by_inclusion_exclusion(ideal);
}

Integer colength_by_box(const MonomialIdeal& ideal) {
  if (!is_artinian_colength(ideal))
    throw InfiniteLength("colength of a non-Artinian monomial ideal is infinite");
  if (ideal.is_unit()) return 0;
  const auto box = pure_power_box(ideal);
  const std::size_t m = box.size();
  const std::size_t last = m - 1;

  // Walk the box in the first m-1 coordinates; along the last axis the
  // standard monomials form an initial segment whose length is the least
  // last-exponent among the generators dividing the current column.
  std::vector<Exponent> point(last, 0);
  std::uint64_t count = 0;
  while (true) {
    Exponent column = box[last];
    for (const auto& g : ideal.generators()) {
      if (g[last] >= column) continue;
      bool divides = true;
      for (std::size_t i = 0; i < last && divides; ++i) divides = g[i] <= point[i];
      if (divides) column = g[last];
    }
    count += column;

    std::size_t k = 0;
    while (k < last && ++point[k] == box[k]) point[k++] = 0;
    if (k == last) break;
  }
  return Integer(count);
}

namespace {

// |union of (g + N^m) over gens, clipped to the box [0, box)|, by the
// inclusion-exclusion recursion F(g, rest) = vol(g) + F(rest) - F(lcm(g, rest)).
class BoxUnionCounter {
 public:
  explicit BoxUnionCounter(std::vector<Exponent> box) : box_(std::move(box)) {}

  Integer count(std::vector<ExponentVector> gens) {
    std::erase_if(gens, [&](const ExponentVector& g) { return !inside(g); });
    return count_minimal(MonomialIdeal(box_.size(), std::move(gens)).generators());
  }

 private:
  bool inside(const ExponentVector& g) const {
    for (std::size_t i = 0; i < box_.size(); ++i)
      if (g[i] >= box_[i]) return false;
    return true;
  }

  Integer volume(const ExponentVector& g) const {
    Integer v = 1;
    for (std::size_t i = 0; i < box_.size(); ++i) v *= box_[i] - g[i];
    return v;
  }

  Integer count_minimal(const std::vector<ExponentVector>& gens) {
    if (gens.empty()) return 0;
    if (gens.size() == 1) return volume(gens.front());
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    const ExponentVector& pivot = gens.front();
    std::vector<ExponentVector> rest(gens.begin() + 1, gens.end());
    std::vector<ExponentVector> overlaps;
    overlaps.reserve(rest.size());
    for (const auto& h : rest) {
      auto l = lcm(pivot, h);
      if (inside(l)) overlaps.push_back(std::move(l));
    }
    Integer total = volume(pivot) + count_minimal(rest) -
                    count_minimal(MonomialIdeal(box_.size(), std::move(overlaps)).generators());
    memo_.emplace(gens, total);
    return total;
  }

  std::vector<Exponent> box_;
  std::map<std::vector<ExponentVector>, Integer> memo_;
};

}  // namespace

Integer colength_by_inclusion_exclusion(const MonomialIdeal& ideal) {
  if (!is_artinian_colength(ideal))
    throw InfiniteLength("colength of a non-Artinian monomial ideal is infinite");
  if (ideal.is_unit()) return 0;
  const auto box = pure_power_box(ideal);
  Integer volume = 1;
  for (Exponent b : box) volume *= b;
  BoxUnionCounter counter(box);
  return volume - counter.count(ideal.generators());
}

namespace {

// |union over u in gens of (u N^m minus I)| where |u N^m minus I| is the
// colength of I : u.
class NestedCounter {
 public:
  explicit NestedCounter(const MonomialIdeal& inner) : inner_(inner) {}

  Integer count(const std::vector<ExponentVector>& gens) {
    std::vector<ExponentVector> live;
    for (const auto& g : gens)
      if (!contains(inner_, g)) live.push_back(g);
    if (live.empty()) return 0;
    if (live.size() == 1) return colength(colon(inner_, live.front()));
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;

    const ExponentVector& pivot = live.front();
    std::vector<ExponentVector> rest(live.begin() + 1, live.end());
    std::vector<ExponentVector> overlaps;
    overlaps.reserve(rest.size());
    for (const auto& h : rest) overlaps.push_back(lcm(pivot, h));
    Integer total = colength(colon(inner_, pivot)) + count(rest) -
                    count(MonomialIdeal(inner_.ambient(), std::move(overlaps)).generators());
    memo_.emplace(std::move(live), total);
    return total;
  }

 private:
  const MonomialIdeal& inner_;
  std::map<std::vector<ExponentVector>, Integer> memo_;
};

}  // namespace

Integer nested_length(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_same_ambient(inner, outer);
  if (!contains(outer, inner)) throw InputError("nested_length requires inner ideal inside outer");
  for (const auto& g : outer.generators()) {
    if (contains(inner, g)) continue;
    if (!is_artinian_colength(colon(inner, g)))
      throw InfiniteLength("quotient of nested monomial ideals has infinite length");
  }
  NestedCounter counter(inner);
  return counter.count(outer.generators());
}

// ---------------------------------------------------------------------------
// Decomposition

MonomialPrime support_variables(const MonomialIdeal& ideal) {
  MonomialPrime vars;
  for (std::size_t i = 0; i < ideal.ambient(); ++i) {
    const bool used = std::any_of(ideal.generators().begin(), ideal.generators().end(),
                                  [&](const ExponentVector& g) { return g[i] > 0; });
    if (used) vars.push_back(i);
  }
  return vars;
}

bool is_primary(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return false;
  const auto box = pure_power_box(ideal);
  for (std::size_t v : support_variables(ideal))
    if (box[v] == 0) return false;
  return true;
}

namespace {

bool is_irreducible(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const ExponentVector& g) { return g.pure_power_variable() >= 0; });
}

// Splits on the lexicographically first mixed generator g, using its first
// variable x_i: I = (I + x_i^{g_i}) cap (I + g / x_i^{g_i}).
std::vector<MonomialIdeal> irreducible_components(const MonomialIdeal& ideal) {
  std::set<MonomialIdeal> done;
  std::set<MonomialIdeal> seen{ideal};
  std::vector<MonomialIdeal> work{ideal};
  const std::size_t m = ideal.ambient();
  while (!work.empty()) {
    MonomialIdeal current = std::move(work.back());
    work.pop_back();
    if (current.is_unit()) continue;
    if (is_irreducible(current)) {
      done.insert(std::move(current));
      continue;
    }
    const auto mixed = std::find_if(
        current.generators().begin(), current.generators().end(),
        [](const ExponentVector& g) { return g.pure_power_variable() < 0 && !g.is_zero(); });
    const ExponentVector& g = *mixed;
    std::size_t var = 0;
    while (g[var] == 0) ++var;
    ExponentVector head = ExponentVector::unit_vector(m, var, g[var]);
    ExponentVector tail = g;
    tail[var] = 0;
    for (auto& part : {head, tail}) {
      MonomialIdeal branch = sum(current, MonomialIdeal(m, {part}));
      if (seen.insert(branch).second) work.push_back(std::move(branch));
    }
  }
  // Drop components that contain another one.
  std::vector<MonomialIdeal> all(done.begin(), done.end());
  std::vector<MonomialIdeal> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant; ++j)
      redundant = j != i && contains(all[i], all[j]);
    if (!redundant) kept.push_back(all[i]);
  }
  return kept;
}

MonomialIdeal intersect_all(std::size_t m, const std::vector<PrimaryComponent>& comps,
                            std::size_t skip) {
  MonomialIdeal result = MonomialIdeal::unit(m);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != skip) result = intersect(result, comps[i].ideal);
  return result;
}

}  // namespace

PrimaryDecomposition primary_decompose(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("primary decomposition of the unit ideal");
  const std::size_t m = ideal.ambient();

  std::map<MonomialPrime, MonomialIdeal> by_radical;
  for (auto& comp : irreducible_components(ideal)) {
    auto prime = support_variables(comp);
    auto [it, inserted] = by_radical.try_emplace(prime, comp);
    if (!inserted) it->second = intersect(it->second, comp);
  }
  PrimaryDecomposition result;
  for (auto& [prime, comp] : by_radical) result.components.push_back({prime, comp});

  // Greedy irredundancy pass; a no-op for decompositions built as above.
  for (std::size_t i = 0; i < result.components.size() && result.components.size() > 1;) {
    if (intersect_all(m, result.components, i) == ideal)
      result.components.erase(result.components.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return result;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> primes;
  for (auto& c : primary_decompose(ideal).components) primes.push_back(c.prime);
  return primes;
}

std::size_t dimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("dimension of the unit ideal is undefined");
  std::size_t smallest = ideal.ambient();
  for (const auto& p : associated_primes(ideal)) smallest = std::min(smallest, p.size());
  return ideal.ambient() - smallest;
}

UnmixedComponent unmixed_component(const MonomialIdeal& ideal) {
  const auto decomposition = primary_decompose(ideal);
  const std::size_t m = ideal.ambient();
  std::size_t smallest = m;
  for (const auto& c : decomposition.components) smallest = std::min(smallest, c.prime.size());

  MonomialIdeal lift = MonomialIdeal::unit(m);
  bool all_top = true;
  for (const auto& c : decomposition.components) {
    if (c.prime.size() == smallest)
      lift = intersect(lift, c.ideal);
    else
      all_top = false;
  }
  if (all_top) return {ideal, true};
  return {lift, false};
}

}  // namespace hilbco
