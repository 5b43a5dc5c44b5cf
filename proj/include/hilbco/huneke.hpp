#pragma once

// g_1 and g_2 of a two-dimensional Cohen-Macaulay ring from a minimal
// reduction J of Q, via Huneke's fundamental lemma:
//
//   g_1 = sum_{n>=1} v_n,   g_2 = sum_{n>=1} (n-1) v_n + l(R/K),
//   v_1 = e_0 - l(R/KQ) + l(R/K),
//   v_n = l(KQ^n / KJQ^{n-1}) - l((KQ^{n-1} : J) / KQ^{n-2})   (n >= 2).

#include <utility>
#include <vector>

#include "hilbco/hilbert.hpp"

namespace hilbco {

struct VSequence {
  /// v_0 .. v_N; v_0 = e_0(Q) = l(R/J) is stored but never summed.
  std::vector<Integer> values;
  /// Every v_n with n >= tail_zero_from is zero.
  std::size_t tail_zero_from = 0;
  /// Least n with J Q^n = Q^{n+1}.
  std::size_t reduction_number = 0;
  /// Set when the ring fails a necessary condition for Cohen-Macaulayness.
  bool cm_warning = false;
};

VSequence v_sequence(const IdealHandle& q, const IdealHandle& k, const IdealHandle& j,
                     std::size_t last, LengthCache& cache);

/// (g_1, g_2); throws NoStabilization unless the tail is zero before N.
std::pair<Integer, Integer> g12_from_v(const VSequence& v, const Integer& length_r_mod_k);

}  // namespace hilbco
