#include "hilbco/semigroup.hpp"

#include <algorithm>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbco {

namespace {

// Walks the box [0, side]^m in row-major order (last coordinate fastest),
// calling visit(index, coords) for every cell.
template <typename Visit>
void for_each_cell(std::size_t dim, Exponent side, Visit&& visit) {
  std::vector<Exponent> coords(dim, 0);
  std::size_t index = 0;
  while (true) {
    visit(index, coords);
    ++index;
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (coords[k] < side) {
        ++coords[k];
        break;
      }
      coords[k] = 0;
      if (k == 0) return;
    }
    if (dim == 0) return;
  }
}

std::vector<std::size_t> strides_for(std::size_t dim, Exponent side) {
  std::vector<std::size_t> strides(dim, 1);
  for (std::size_t k = dim; k-- > 1;) strides[k - 1] = strides[k] * (static_cast<std::size_t>(side) + 1);
  return strides;
}

std::size_t cell_count(std::size_t dim, Exponent side) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < dim; ++k) n *= static_cast<std::size_t>(side) + 1;
  return n;
}

std::size_t offset_of(const ExponentVector& v, const std::vector<std::size_t>& strides) {
  std::size_t off = 0;
  for (std::size_t k = 0; k < strides.size(); ++k) off += v[k] * strides[k];
  return off;
}

Exponent max_entry(const std::vector<ExponentVector>& vs) {
  Exponent m = 0;
  for (const auto& v : vs) m = std::max(m, v.max_entry());
  return m;
}

bool dominates(const std::vector<Exponent>& coords, const ExponentVector& g) {
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] < g[k]) return false;
  return true;
}

// b - a when a <= b componentwise.
std::optional<ExponentVector> difference(const ExponentVector& b, const ExponentVector& a) {
  if (!a.divides(b)) return std::nullopt;
  ExponentVector d(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) d[i] = b[i] - a[i];
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------

AffineSemigroup::AffineSemigroup(std::size_t ambient_dim, std::vector<ExponentVector> generators)
    : dim_(ambient_dim), gens_(std::move(generators)) {
  if (dim_ == 0) throw InputError("affine semigroup needs a positive ambient dimension");
  if (gens_.empty()) throw InputError("affine semigroup needs at least one generator");
  for (const auto& g : gens_) {
    if (g.size() != dim_) throw AmbientMismatch(dim_, g.size());
    if (g.is_zero()) throw InputError("affine semigroup generators must be non-zero");
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

Exponent AffineSemigroup::max_generator_entry() const noexcept { return max_entry(gens_); }

std::size_t AffineSemigroup::rank() const {
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> rows;
  for (const auto& g : gens_) {
    std::vector<cpp_rational> row;
    for (Exponent x : g) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim_ && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const cpp_rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < dim_; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------

MembershipTable::MembershipTable(const AffineSemigroup& s, Exponent side)
    : side_(side), cells_(cell_count(s.ambient_dim(), side), 0) {
  const auto strides = strides_for(s.ambient_dim(), side);
  std::vector<std::size_t> offsets;
  for (const auto& g : s.generators()) offsets.push_back(offset_of(g, strides));
  for_each_cell(s.ambient_dim(), side, [&](std::size_t idx, const std::vector<Exponent>& c) {
    if (idx == 0) {
      cells_[0] = 1;
      return;
    }
    for (std::size_t j = 0; j < offsets.size(); ++j) {
      if (dominates(c, s.generators()[j]) && cells_[idx - offsets[j]]) {
        cells_[idx] = 1;
        return;
      }
    }
  });
}

std::size_t MembershipTable::index(const ExponentVector& v) const {
  std::size_t idx = 0;
  for (Exponent x : v) idx = idx * (static_cast<std::size_t>(side_) + 1) + x;
  return idx;
}

bool MembershipTable::contains(const ExponentVector& v) const {
  if (v.max_entry() > side_) throw InputError("element outside the membership table");
  return cells_[index(v)] != 0;
}

bool sg_membership(const AffineSemigroup& s, const ExponentVector& v, Exponent bound) {
  if (v.size() != s.ambient_dim()) throw AmbientMismatch(s.ambient_dim(), v.size());
  if (v.max_entry() > bound) throw InputError("semigroup membership: bound exceeded");
  if (v.is_zero()) return true;
  return MembershipTable(s, v.max_entry()).contains(v);
}

// ---------------------------------------------------------------------------

SemigroupIdeal::SemigroupIdeal(AffineSemigroup s, std::vector<ExponentVector> gens)
    : s_(std::move(s)) {
  if (gens.empty()) throw InputError("semigroup ideal needs at least one generator");
  for (const auto& g : gens)
    if (g.size() != s_.ambient_dim()) throw AmbientMismatch(s_.ambient_dim(), g.size());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const MembershipTable table(s_, max_entry(gens));
  for (const auto& g : gens)
    if (!table.contains(g)) throw InputError("semigroup ideal generator is not in the semigroup");
  for (const auto& b : gens) {
    const bool redundant = std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& a) {
      if (a == b) return false;
      auto d = difference(b, a);
      return d && table.contains(*d);
    });
    if (!redundant) gens_.push_back(b);
  }
}

SemigroupIdeal SemigroupIdeal::unit(const AffineSemigroup& s) {
  return SemigroupIdeal(s, {ExponentVector(s.ambient_dim())}, Reduced{});
}

Exponent SemigroupIdeal::max_generator_entry() const noexcept { return max_entry(gens_); }

bool SemigroupIdeal::is_unit() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) { return g.is_zero(); });
}

SemigroupIdeal sg_ideal_product(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (!(a.semigroup() == b.semigroup())) throw InputError("semigroup mismatch");
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g + h);
  return SemigroupIdeal(a.semigroup(), std::move(gens));
}

SemigroupIdeal sg_ideal_power(const SemigroupIdeal& ideal, unsigned n) {
  SemigroupIdeal result = SemigroupIdeal::unit(ideal.semigroup());
  for (unsigned i = 0; i < n; ++i) result = sg_ideal_product(result, ideal);
  return result;
}

bool sg_contains(const SemigroupIdeal& ideal, const ExponentVector& element) {
  if (element.size() != ideal.semigroup().ambient_dim())
    throw AmbientMismatch(ideal.semigroup().ambient_dim(), element.size());
  if (element.is_zero()) return ideal.is_unit();
  const MembershipTable table(ideal.semigroup(), element.max_entry());
  if (!table.contains(element)) return false;
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVector& a) {
                       auto d = difference(element, a);
                       return d && table.contains(*d);
                     });
}

bool sg_contains(const SemigroupIdeal& ideal, const SemigroupIdeal& other) {
  if (!(ideal.semigroup() == other.semigroup())) throw InputError("semigroup mismatch");
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const ExponentVector& g) { return sg_contains(ideal, g); });
}

// ---------------------------------------------------------------------------

Integer sg_count_outside(const SemigroupIdeal& ideal, Exponent bound) {
  if (ideal.is_unit()) return 0;
  const AffineSemigroup& s = ideal.semigroup();
  const std::size_t dim = s.ambient_dim();
  const auto strides = strides_for(dim, bound);
  const auto& gens = s.generators();
  std::vector<std::size_t> offsets;
  for (const auto& g : gens) offsets.push_back(offset_of(g, strides));

  // Bit 0: in S. Bit 1: in the ideal. Bit 2: an ideal generator.
  constexpr std::uint8_t kInS = 1, kInIdeal = 2, kGenerator = 4;
  std::vector<std::uint8_t> cells(cell_count(dim, bound), 0);
  for (const auto& a : ideal.generators())
    if (a.max_entry() <= bound) cells[offset_of(a, strides)] |= kGenerator;
  std::uint8_t* data = cells.data();

  // Rows run along the last coordinate; a generator can step into a row
  // only if the row prefix dominates it.
  const std::size_t row = static_cast<std::size_t>(bound) + 1;
  const std::size_t rows = cells.size() / row;
  std::vector<Exponent> prefix(dim, 0);
  std::vector<std::size_t> active_offset;
  std::vector<Exponent> active_start;
  std::uint64_t outside = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    active_offset.clear();
    active_start.clear();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k + 1 < dim && ok; ++k) ok = prefix[k] >= gens[j][k];
      if (ok) {
        active_offset.push_back(offsets[j]);
        active_start.push_back(gens[j][dim - 1]);
      }
    }
    std::uint8_t* line = data + r * row;
    for (std::size_t t = 0; t < row; ++t) {
      std::uint8_t state = line[t];
      if (r == 0 && t == 0) {
        state |= kInS;
      } else {
        for (std::size_t j = 0; j < active_offset.size(); ++j) {
          if (t < active_start[j]) continue;
          state |= line[t - active_offset[j]] & (kInS | kInIdeal);
          if (state & kInIdeal) break;
        }
      }
      if (state & kGenerator) state |= kInIdeal;
      line[t] = state;
      outside += (state & (kInS | kInIdeal)) == kInS;
    }
    for (std::size_t k = dim - 1; k-- > 0;) {
      if (prefix[k] < bound) {
        ++prefix[k];
        break;
      }
      prefix[k] = 0;
    }
  }
  return Integer(outside);
}

SemigroupCount sg_colength(const SemigroupIdeal& ideal, Exponent bound, int retries) {
  if (bound == 0) throw InputError("semigroup count bound must be positive");
  if (ideal.is_unit()) return {0, true, bound};
  Integer previous = sg_count_outside(ideal, bound);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const Exponent doubled = bound * 2;
    Integer current = sg_count_outside(ideal, doubled);
    if (current == previous) return {current, true, doubled};
    previous = std::move(current);
    bound = doubled;
  }
  return {previous, false, bound};
}

Exponent sg_default_bound(const SemigroupIdeal& ideal) {
  return 40 * (ideal.max_generator_entry() + ideal.semigroup().max_generator_entry());
}

}  // namespace hilbco
