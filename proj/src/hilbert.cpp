#include "hilbco/hilbert.hpp"

#include <algorithm>

namespace hilbco {

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::hilbert_samuel: return "hilbert_samuel";
    case SequenceKind::hilbert_K: return "hilbert_K";
    case SequenceKind::fiber: return "fiber";
    case SequenceKind::module: return "module";
  }
  return "unknown";
}

Integer binomial(const Integer& top, unsigned k) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= top - j;
    den *= j + 1;
  }
  return num / den;
}

namespace {

// B_j(m) = C(m + j - 1, j); the backward difference of B_j is B_{j-1}.
Integer basis(int j, const Integer& m) { return binomial(m + j - 1, static_cast<unsigned>(j)); }

// table[k][n] = k-th backward difference at n, defined for n >= k.
std::vector<std::vector<Integer>> backward_differences(const std::vector<Integer>& values,
                                                       int order) {
  std::vector<std::vector<Integer>> table{values};
  for (int k = 1; k <= order; ++k) {
    const auto& prev = table.back();
    std::vector<Integer> next(prev.size());
    for (std::size_t n = static_cast<std::size_t>(k); n < prev.size(); ++n)
      next[n] = prev[n] - prev[n - 1];
    table.push_back(std::move(next));
  }
  return table;
}

bool constant_over(const std::vector<Integer>& row, std::size_t from, std::size_t to) {
  for (std::size_t n = from + 1; n <= to; ++n)
    if (row[n] != row[from]) return false;
  return true;
}

bool zero_over(const std::vector<Integer>& row, std::size_t from, std::size_t to) {
  for (std::size_t n = from; n <= to; ++n)
    if (row[n] != 0) return false;
  return true;
}

}  // namespace

Integer BinomialPolynomial::operator()(const Integer& n) const {
  Integer total = 0;
  for (int i = 0; i <= degree; ++i) {
    const Integer term = coeffs[static_cast<std::size_t>(i)] * basis(degree - i, n + shift);
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BinomialPolynomial make_binomial_polynomial(std::vector<Integer> coeffs, int shift) {
  if (coeffs.empty()) throw InputError("binomial polynomial needs at least one coefficient");
  BinomialPolynomial p;
  p.degree = static_cast<int>(coeffs.size()) - 1;
  p.shift = shift;
  p.coeffs = std::move(coeffs);
  return p;
}

BinomialPolynomial fit_binomial_polynomial(const std::vector<Integer>& values, int degree,
                                           int window, int shift) {
  if (degree < 0 || window < 1) throw InputError("fit needs degree >= 0 and window >= 1");
  if (values.empty() ||
      values.size() - 1 < static_cast<std::size_t>(degree) + 2 * static_cast<std::size_t>(window))
    throw InputError("fit needs N >= degree + 2 * window; increase N");
  const std::size_t last = values.size() - 1;
  const std::size_t from = last + 1 - static_cast<std::size_t>(window);
  const auto diffs = backward_differences(values, degree + 2);
  const auto d = static_cast<std::size_t>(degree);

  if (!constant_over(diffs[d], from, last)) {
    const bool higher = !zero_over(diffs[d + 1], from, last) &&
                        constant_over(diffs[d + 1], from, last) &&
                        zero_over(diffs[d + 2], from, last);
    if (higher)
      throw DegreeMismatch("sequence grows faster than degree " + std::to_string(degree));
    throw NoStabilization("sequence has not stabilized to a degree " + std::to_string(degree) +
                          " polynomial by N = " + std::to_string(last) + "; increase N");
  }

  // Solve top-down from nabla^k p(N) = sum_{j >= k} a_j B_{j-k}(N + shift).
  const Integer node = Integer(last) + shift;
  std::vector<Integer> a(d + 1);
  for (int k = degree; k >= 0; --k) {
    Integer rhs = diffs[static_cast<std::size_t>(k)][last];
    for (int j = k + 1; j <= degree; ++j) rhs -= a[static_cast<std::size_t>(j)] * basis(j - k, node);
    a[static_cast<std::size_t>(k)] = rhs;
  }
  std::vector<Integer> coeffs(d + 1);
  for (std::size_t i = 0; i <= d; ++i) coeffs[i] = (i % 2 == 0) ? a[d - i] : Integer(-a[d - i]);
  BinomialPolynomial p = make_binomial_polynomial(std::move(coeffs), shift);

  const std::size_t verify_from = last - static_cast<std::size_t>(window) - d;
  for (std::size_t n = verify_from; n <= last; ++n)
    if (p(Integer(n)) != values[n])
      throw NoStabilization("fitted polynomial disagrees with the sequence at n = " +
                            std::to_string(n) + "; increase N");

  std::size_t post = verify_from;
  while (post > 0 && p(Integer(post - 1)) == values[post - 1]) --post;
  p.postulation = post;
  return p;
}

BinomialPolynomial fit_binomial_polynomial(const HilbertSequence& seq, int degree, int window) {
  const int shift =
      (seq.kind == SequenceKind::fiber || seq.kind == SequenceKind::module) ? 1 : 0;
  return fit_binomial_polynomial(seq.values, degree, window, shift);
}

std::optional<int> detect_degree(const std::vector<Integer>& values, int max_degree, int window) {
  if (values.empty()) return std::nullopt;
  const std::size_t last = values.size() - 1;
  const auto diffs = backward_differences(values, max_degree + 1);
  for (int t = 0; t <= max_degree; ++t) {
    const auto order = static_cast<std::size_t>(t) + 1;
    if (last + 1 < order + static_cast<std::size_t>(window)) return std::nullopt;
    if (zero_over(diffs[order], last + 1 - static_cast<std::size_t>(window), last)) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

HilbertSequence hk_sequence(const IdealHandle& q, const IdealHandle& k, std::size_t last,
                            LengthCache& cache) {
  if (!contains(k, q)) throw InputError("Q must be contained in K");
  HilbertSequence seq{SequenceKind::hilbert_K, {}, true};
  IdealHandle current = k;
  for (std::size_t n = 0; n <= last; ++n) {
    auto r = cache.reading(current);
    seq.values.push_back(std::move(r.value));
    seq.certified = seq.certified && r.certified;
    if (n < last) current = product(current, q);
  }
  return seq;
}

HilbertSequence hs_sequence(const IdealHandle& q, std::size_t last, LengthCache& cache) {
  HilbertSequence seq{SequenceKind::hilbert_samuel, {}, true};
  IdealHandle current = IdealHandle::unit(q.ring());
  for (std::size_t n = 0; n <= last; ++n) {
    auto r = cache.reading(current);
    seq.values.push_back(std::move(r.value));
    seq.certified = seq.certified && r.certified;
    if (n < last) current = product(current, q);
  }
  return seq;
}

HilbertSequence fiber_sequence(const HilbertSequence& hk, const HilbertSequence& hs) {
  if (hk.values.size() != hs.values.size())
    throw InputError("fiber sequence needs sequences of equal length");
  HilbertSequence seq{SequenceKind::fiber, {}, hk.certified && hs.certified};
  for (std::size_t n = 0; n < hk.values.size(); ++n) {
    Integer diff = hk.values[n] - hs.values[n];
    if (diff < 0)
      throw ComputationError("internal inconsistency: l(R/KQ^n) < l(R/Q^n) at n = " +
                             std::to_string(n));
    seq.values.push_back(std::move(diff));
  }
  return seq;
}

// ---------------------------------------------------------------------------

bool CoefficientReport::all_identities_hold() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityResult& r) { return r.holds; });
}

std::size_t default_sequence_length(const IdealHandle& q, const IdealHandle& k, std::size_t d) {
  const std::size_t base = 4 * d + 10;
  if (q.ring()->is_semigroup()) return base;
  const std::uint64_t deg = std::max(q.max_generator_degree(), k.max_generator_degree());
  return std::max<std::size_t>(base, 2 * deg + 10);
}

int default_window(std::size_t d) { return static_cast<int>(d) + 2; }

CoefficientReport extract_coefficients(const IdealHandle& q, const IdealHandle& k,
                                       const FitSettings& settings, LengthCache& cache) {
  CoefficientReport r;
  r.dimension = ring_dimension(*q.ring());
  if (r.dimension == 0) throw InputError("Hilbert coefficients need a ring of positive dimension");
  if (q.ring()->is_monomial() && !is_artinian_colength(q.lift()))
    throw InputError("Q is not m-primary");
  if (!contains(k, q)) throw InputError("Q must be contained in K");

  const int d = static_cast<int>(r.dimension);
  r.last = settings.last.value_or(default_sequence_length(q, k, r.dimension));
  r.window = settings.window.value_or(default_window(r.dimension));

  r.hs = hs_sequence(q, r.last, cache);
  r.hk = hk_sequence(q, k, r.last, cache);
  r.fiber = fiber_sequence(r.hk, r.hs);
  r.certified = r.hs.certified && r.hk.certified;

  auto fit = [&](const HilbertSequence& seq, int degree) {
    try {
      return fit_binomial_polynomial(seq, degree, r.window);
    } catch (const NoStabilization& e) {
      throw NoStabilization(to_string(seq.kind) + ": " + e.what());
    } catch (const DegreeMismatch& e) {
      throw DegreeMismatch(to_string(seq.kind) + ": " + e.what());
    }
  };
  r.hs_poly = fit(r.hs, d);
  r.hk_poly = fit(r.hk, d);
  r.fiber_poly = fit(r.fiber, d - 1);
  r.e = r.hs_poly.coeffs;
  r.g = r.hk_poly.coeffs;
  r.f = r.fiber_poly.coeffs;

  auto record = [&](std::string name, Integer lhs, Integer rhs, std::optional<int> index = {}) {
    const bool holds = lhs == rhs;
    r.identities.push_back({std::move(name), holds, std::move(lhs), std::move(rhs), index});
  };
  const auto& e = r.e;
  const auto& g = r.g;
  record("g0=e0", g[0], e[0]);
  for (int i = 0; i < d; ++i) {
    const auto u = static_cast<std::size_t>(i);
    record("f_i=e_{i+1}-g_{i+1}+e_i-g_i", r.f[u], e[u + 1] - g[u + 1] + e[u] - g[u], i);
  }
  for (int n = 0; n <= d; ++n)
    record("P_K(n)=P(n)+P_F(n)", r.hk_poly(n), r.hs_poly(n) + r.fiber_poly(n), n);
  if (q == k) {
    for (int i = 0; i <= d; ++i) {
      Integer alt = 0;
      for (int j = 0; j <= i; ++j) {
        const auto& term = e[static_cast<std::size_t>(i - j)];
        if (j % 2 == 0)
          alt += term;
        else
          alt -= term;
      }
      record("g_i=sum_j(-1)^j e_{i-j}", g[static_cast<std::size_t>(i)], alt, i);
    }
    for (int n = 0; n <= d; ++n) record("P_K(n)=P(n+1)", r.hk_poly(n), r.hs_poly(n + 1), n);
  }
  return r;
}

CoefficientReport extract_coefficients(const IdealHandle& q, const IdealHandle& k,
                                       const FitSettings& settings, const LengthOptions& options) {
  LengthCache cache(options);
  return extract_coefficients(q, k, settings, cache);
}

}  // namespace hilbco
