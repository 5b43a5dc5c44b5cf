#include "hilbco/huneke.hpp"

namespace hilbco {

VSequence v_sequence(const IdealHandle& q, const IdealHandle& k, const IdealHandle& j,
                     std::size_t last, LengthCache& cache) {
  const RingPresentation& ring = *q.ring();
  if (!ring.is_monomial())
    throw UnsupportedOperation("the fundamental-lemma route needs the monomial backend");
  if (ring_dimension(ring) != 2)
    throw UnsupportedOperation("the fundamental-lemma route is implemented for d = 2 only");
  if (last < 2) throw InputError("the fundamental-lemma route needs N >= 2");
  if (!contains(k, q)) throw InputError("Q must be contained in K");
  if (!contains(q, j)) throw InputError("J must be contained in Q");
  if (!is_parameter_ideal(j)) throw InputError("J must be a parameter ideal");

  VSequence v;
  v.cm_warning = !unmixed_component(ring.monomial().relations).is_zero;

  // Powers Q^0 .. Q^{N+1} and the reduction number of J.
  std::vector<IdealHandle> qpow{IdealHandle::unit(q.ring())};
  for (std::size_t n = 0; n <= last; ++n) qpow.push_back(product(qpow.back(), q));
  std::optional<std::size_t> reduction;
  for (std::size_t n = 0; n <= last; ++n) {
    const bool reduces = product(j, qpow[n]) == qpow[n + 1];
    if (reduces && !reduction) reduction = n;
    if (!reduces && reduction)
      throw ComputationError("J Q^n = Q^{n+1} failed after holding at the reduction number");
  }
  if (!reduction) throw InputError("J is not a reduction of Q within N steps");
  v.reduction_number = *reduction;

  auto len = [&](const IdealHandle& ideal) {
    auto r = cache.reading(ideal);
    return r.value;
  };
  std::vector<IdealHandle> kq;
  for (std::size_t n = 0; n <= last; ++n) kq.push_back(product(k, qpow[n]));

  const Integer e0 = len(j);
  v.values.push_back(e0);
  v.values.push_back(e0 - len(kq[1]) + len(kq[0]));
  for (std::size_t n = 2; n <= last; ++n) {
    const IdealHandle kjq = product(product(k, j), qpow[n - 1]);
    const Integer upper = len(kjq) - len(kq[n]);
    const IdealHandle col = colon(kq[n - 1], j);
    Integer lower;
    try {
      lower = nested_length(kq[n - 2].lift(), col.lift());
    } catch (const InfiniteLength&) {
      throw InfiniteLength("(KQ^{n-1} : J) / KQ^{n-2} has infinite length at n = " +
                           std::to_string(n));
    }
    v.values.push_back(upper - lower);
  }

  v.tail_zero_from = v.values.size();
  while (v.tail_zero_from > 1 && v.values[v.tail_zero_from - 1] == 0) --v.tail_zero_from;
  return v;
}

std::pair<Integer, Integer> g12_from_v(const VSequence& v, const Integer& length_r_mod_k) {
  const std::size_t last = v.values.size() - 1;
  if (v.tail_zero_from >= last)
    throw NoStabilization("v_n has not vanished before N; increase N");
  Integer g1 = 0;
  Integer g2 = length_r_mod_k;
  for (std::size_t n = 1; n < v.values.size(); ++n) {
    g1 += v.values[n];
    g2 += Integer(n - 1) * v.values[n];
  }
  return {g1, g2};
}

}  // namespace hilbco
