#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// counting, decomposition or fitting code; only value types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hilbco/monomial.hpp"

namespace oracle {

using hilbco::Exponent;
using hilbco::ExponentVector;
using Gens = std::vector<ExponentVector>;
using Rational = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const Gens& gens, const ExponentVector& v) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return divides(g, v); });
}

/// Calls f on every vector of [0, side]^m.
inline void for_box(std::size_t m, Exponent side, const std::function<void(const ExponentVector&)>& f) {
  ExponentVector v(m);
  while (true) {
    f(v);
    std::size_t k = 0;
    while (k < m && v[k] == side) v[k++] = 0;
    if (k == m) return;
    ++v[k];
  }
}

inline Exponent max_exponent(const Gens& gens) {
  Exponent e = 0;
  for (const auto& g : gens)
    for (Exponent x : g) e = std::max(e, x);
  return e;
}

/// Number of monomials outside the ideal; assumes it is Artinian.
inline std::uint64_t colength(std::size_t m, const Gens& gens) {
  std::uint64_t count = 0;
  for_box(m, max_exponent(gens), [&](const ExponentVector& v) { count += !member(gens, v); });
  return count;
}

/// Same count, column by column: for each prefix of the first m-1
/// exponents, the standard monomials stop at the least last exponent of a
/// generator whose prefix divides it.
inline std::uint64_t colength_by_columns(std::size_t m, const Gens& gens) {
  const Exponent side = max_exponent(gens);
  std::uint64_t count = 0;
  if (m == 1) {
    Exponent low = side;
    for (const auto& g : gens) low = std::min(low, g[0]);
    return low;
  }
  for_box(m - 1, side, [&](const ExponentVector& p) {
    Exponent low = side + 1;
    for (const auto& g : gens) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < m && ok; ++i) ok = g[i] <= p[i];
      if (ok) low = std::min(low, g[m - 1]);
    }
    if (low > side) throw std::runtime_error("ideal is not Artinian");
    count += low;
  });
  return count;
}

/// l(K cap H^0_m(R)) for R = k[x]/I0: monomials of K outside I0 that some
/// power of every variable pushes into I0.
inline std::uint64_t h0_in(std::size_t m, const Gens& i0, const Gens& k) {
  const Exponent side = std::max(max_exponent(i0), max_exponent(k));
  std::uint64_t count = 0;
  for_box(m, side, [&](const ExponentVector& v) {
    if (member(i0, v) || !member(k, v)) return;
    for (std::size_t i = 0; i < m; ++i) {
      ExponentVector w = v;
      w[i] += side + 1;
      if (!member(i0, w)) return;
    }
    ++count;
  });
  return count;
}

/// Monomials of J outside I, inside a box large enough when l(J/I) is finite.
inline std::uint64_t nested(std::size_t m, const Gens& inner, const Gens& outer) {
  const Exponent side = max_exponent(inner) + max_exponent(outer) + 1;
  std::uint64_t count = 0;
  for_box(m, side, [&](const ExponentVector& v) { count += member(outer, v) && !member(inner, v); });
  return count;
}

/// Ideal equality tested on every monomial of a box containing all generators.
inline bool same_ideal(std::size_t m, const Gens& a, const Gens& b) {
  const Exponent side = std::max(max_exponent(a), max_exponent(b));
  bool same = true;
  for_box(m, side, [&](const ExponentVector& v) { same = same && member(a, v) == member(b, v); });
  return same;
}

/// Intersection membership: v lies in every listed ideal.
inline bool same_as_intersection(std::size_t m, const Gens& ideal, const std::vector<Gens>& parts) {
  Exponent side = max_exponent(ideal);
  for (const auto& p : parts) side = std::max(side, max_exponent(p));
  bool same = true;
  for_box(m, side, [&](const ExponentVector& v) {
    const bool in_all =
        std::all_of(parts.begin(), parts.end(), [&](const Gens& p) { return member(p, v); });
    same = same && in_all == member(ideal, v);
  });
  return same;
}

/// A monomial ideal is primary iff each variable in some generator has a
/// pure power in the ideal.
inline bool primary(std::size_t m, const Gens& gens) {
  std::vector<bool> has_power(m, false);
  for (const auto& g : gens) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (g[i] > 0) ++support, var = i;
    if (support == 1) has_power[var] = true;
  }
  for (const auto& g : gens)
    for (std::size_t i = 0; i < m; ++i)
      if (g[i] > 0 && !has_power[i]) return false;
  return true;
}

/// Elements of an affine semigroup inside [0, side]^m by breadth-first closure.
inline std::set<ExponentVector> semigroup_elements(const Gens& gens, std::size_t m, Exponent side) {
  std::set<ExponentVector> seen{ExponentVector(m)};
  std::vector<ExponentVector> frontier{ExponentVector(m)};
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        ExponentVector b(m);
        bool inside = true;
        for (std::size_t i = 0; i < m; ++i) {
          b[i] = a[i] + g[i];
          inside = inside && b[i] <= side;
        }
        if (inside && seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// |S \ (I + S)| within the box, with I given by generators in S.
inline std::uint64_t semigroup_colength(const Gens& s_gens, const Gens& ideal, std::size_t m,
                                        Exponent side) {
  const auto s = semigroup_elements(s_gens, m, side);
  std::uint64_t count = 0;
  for (const auto& v : s) {
    bool in_ideal = false;
    for (const auto& a : ideal) {
      if (!divides(a, v)) continue;
      ExponentVector d(m);
      for (std::size_t i = 0; i < m; ++i) d[i] = v[i] - a[i];
      if (s.count(d)) {
        in_ideal = true;
        break;
      }
    }
    count += !in_ideal;
  }
  return count;
}

inline Rational binom(const Rational& top, unsigned k) {
  Rational r = 1;
  for (unsigned j = 0; j < k; ++j) r = r * (top - j) / (j + 1);
  return r;
}

/// Solves for c_0..c_degree in
///   value(n) = sum_i (-1)^i c_i C(n + shift + degree - i - 1, degree - i)
/// from the points n = last - degree .. last by Gaussian elimination.
inline std::vector<Int> fit(const std::vector<Int>& values, int degree, int shift) {
  const std::size_t k = static_cast<std::size_t>(degree) + 1;
  const std::size_t last = values.size() - 1;
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t n = last - r;
    for (std::size_t i = 0; i < k; ++i) {
      const int top = static_cast<int>(n) + shift + degree - static_cast<int>(i) - 1;
      Rational b = binom(Rational(top), static_cast<unsigned>(degree - static_cast<int>(i)));
      a[r][i] = i % 2 == 0 ? b : Rational(-b);
    }
    a[r][k] = Rational(values[n]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Int> out;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational c = a[i][k] / a[i][i];
    if (denominator(c) != 1) throw std::runtime_error("non-integral coefficient");
    out.push_back(numerator(c));
  }
  return out;
}

}  // namespace oracle
