#include "hilbco/analysis.hpp"

#include <algorithm>

namespace hilbco {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::eq: return "==";
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::lt: return "<";
    case Relation::gt: return ">";
    case Relation::iff: return "<=>";
  }
  return "?";
}

Verdict make_verdict(std::string id, Integer lhs, Relation rel, Integer rhs,
                     std::optional<int> index, std::string note) {
  bool holds = false;
  switch (rel) {
    case Relation::eq:
    case Relation::iff: holds = lhs == rhs; break;
    case Relation::le: holds = lhs <= rhs; break;
    case Relation::ge: holds = lhs >= rhs; break;
    case Relation::lt: holds = lhs < rhs; break;
    case Relation::gt: holds = lhs > rhs; break;
  }
  return {std::move(id), std::move(lhs), std::move(rhs), rel, holds, index, std::move(note)};
}

namespace {

Verdict make_iff(std::string id, bool lhs, bool rhs, std::string note = {}) {
  return make_verdict(std::move(id), lhs ? 1 : 0, Relation::iff, rhs ? 1 : 0, {}, std::move(note));
}

Integer sign_power(int i) { return i % 2 == 0 ? 1 : -1; }

}  // namespace

Unmixedness unmixedness(const RingPresentation& ring) {
  Unmixedness u;
  if (ring.is_semigroup()) {
    u.domain = true;
    return u;
  }
  const auto& i0 = ring.monomial().relations;
  const std::size_t d = dimension(i0);
  u.ass = associated_primes(i0);
  for (const auto& p : u.ass)
    if (i0.ambient() - p.size() == d) u.assh.push_back(p);
  u.unmixed = u.ass == u.assh;
  return u;
}

RingFacts ring_facts(const RingPresentation& ring) {
  RingFacts f;
  f.dimension = ring_dimension(ring);
  f.unmixedness = unmixedness(ring);
  if (ring.is_semigroup()) return f;
  const auto& i0 = ring.monomial().relations;
  auto u = unmixed_component(i0);
  f.u_is_zero = u.is_zero;
  if (!u.is_zero) {
    f.u_dimension = static_cast<int>(dimension(colon(i0, u.lift)));
    f.u_lift = std::move(u.lift);
  }
  return f;
}

// ---------------------------------------------------------------------------

Analyzer::Analyzer(IdealHandle q, IdealHandle k, AnalysisOptions options)
    : q_(std::move(q)), k_(std::move(k)), options_(std::move(options)), cache_(options_.length) {
  if (q_.ring() != k_.ring() && !(*q_.ring() == *k_.ring()))
    throw InputError("Q and K belong to different rings");
  if (!contains(k_, q_)) throw InputError("Q must be contained in K");
}

const RingFacts& Analyzer::facts() {
  if (!facts_) {
    facts_ = ring_facts(*q_.ring());
    if (facts_->dimension == 0) throw InputError("analysis needs a ring of positive dimension");
  }
  return *facts_;
}

const CoefficientReport& Analyzer::coefficients() {
  if (!coeffs_) coeffs_ = extract_coefficients(q_, k_, options_.fit, cache_);
  return *coeffs_;
}

const CoefficientReport& Analyzer::coefficients_k_equals_q() {
  if (q_ == k_) return coefficients();
  if (!coeffs_qq_) coeffs_qq_ = extract_coefficients(q_, q_, options_.fit, cache_);
  return *coeffs_qq_;
}

bool Analyzer::q_is_parameter() {
  if (!parameter_) parameter_ = is_parameter_ideal(q_, options_.length);
  return *parameter_;
}

void Analyzer::require_parameter() {
  if (!q_is_parameter())
    throw InputError("Q is not a parameter ideal: it has " +
                     std::to_string(q_.minimal_generators().size()) +
                     " minimal generators in a ring of dimension " +
                     std::to_string(facts().dimension));
}

Integer Analyzer::length_r_mod_k() { return length_of_quotient(k_, options_.length); }
Integer Analyzer::length_r_mod_q() { return length_of_quotient(q_, options_.length); }

Integer Analyzer::length_r_mod_k_plus_u() {
  if (facts().u_is_zero) return length_r_mod_k();
  return colength(sum(k_.lift(), *facts().u_lift));
}

Integer Analyzer::length_r_mod_q_plus_u() {
  if (facts().u_is_zero) return length_r_mod_q();
  return colength(sum(q_.lift(), *facts().u_lift));
}

RingPtr Analyzer::s_ring() {
  if (facts().u_is_zero) return q_.ring();
  if (!s_ring_)
    s_ring_ = make_ring(RingPresentation(q_.ring()->monomial().variables, *facts().u_lift));
  return s_ring_;
}

const CoefficientReport& Analyzer::coefficients_of_s() {
  if (facts().u_is_zero) return coefficients();
  if (!coeffs_s_) {
    auto ring = s_ring();
    coeffs_s_ = extract_coefficients(push_forward(q_, ring), push_forward(k_, ring),
                                     options_.fit, cache_);
  }
  return *coeffs_s_;
}

// ---------------------------------------------------------------------------

std::vector<Verdict> Analyzer::theorem_main() {
  require_parameter();
  const auto& c = coefficients();
  const Integer lk = length_r_mod_k(), lq = length_r_mod_q();
  const Integer f0_from_identity = c.e[1] - c.g[1] + c.e[0] - c.g[0];
  if (c.f[0] != f0_from_identity)
    throw ComputationError("fiber fit f_0 disagrees with e_1 - g_1 + e_0 - g_0");

  const std::string note = facts().unmixedness.unmixed
                               ? "R is unmixed: the relation holds iff R is Cohen-Macaulay"
                               : "R is not unmixed: the characterization does not apply";
  const Integer g01 = c.g[0] + c.g[1];
  const Integer rhs = lq - lk;
  const Integer fiber_rhs = lk + c.e[1] + c.e[0] - lq;
  return {
      make_verdict("THM-b", g01, Relation::eq, rhs, {}, note),
      make_verdict("THM-c", g01, Relation::ge, rhs, {}, note),
      make_verdict("THM-d", c.f[0], Relation::le, fiber_rhs, {}, note),
      make_verdict("THM-e", c.f[0], Relation::eq, fiber_rhs, {}, note),
  };
}

std::optional<bool> Analyzer::cohen_macaulay_by_main_theorem() {
  if (!facts().unmixedness.unmixed) return std::nullopt;
  return theorem_main()[1].holds;
}

std::vector<Verdict> Analyzer::negativity_bounds() {
  require_parameter();
  const auto& c = coefficients();
  const Integer lk = length_r_mod_k(), lq = length_r_mod_q();
  const Integer g01 = c.g[0] + c.g[1];
  const Integer fiber_rhs = lk + c.e[1] + c.e[0] - lq;
  std::vector<Verdict> out{
      make_verdict("COR-NEG-a1", g01, Relation::le, lq - lk),
      make_verdict("COR-NEG-a2", c.f[0], Relation::ge, fiber_rhs),
  };
  if (options_.depth_flag) {
    const std::string note = "depth R = d - 1 asserted by the caller";
    out.push_back(make_verdict("COR-NEG-b1", g01, Relation::lt, lq - lk, {}, note));
    out.push_back(make_verdict("COR-NEG-b2", c.f[0], Relation::gt, fiber_rhs, {}, note));
  }
  return out;
}

std::vector<Verdict> Analyzer::e1_corollary() {
  require_parameter();
  const auto& c = coefficients_k_equals_q();
  std::vector<Verdict> out{make_verdict("COR-E1-a", c.e[1], Relation::le, 0)};
  if (options_.depth_flag)
    out.push_back(make_verdict("COR-E1-b", c.e[1], Relation::lt, 0, {},
                               "depth R = d - 1 asserted by the caller"));
  out.push_back(make_verdict("COR-E1-sum", c.g[0] + c.g[1], Relation::eq, c.e[1], {},
                             "g_0 + g_1 with K = Q"));
  return out;
}

std::vector<Verdict> Analyzer::prop_dim1() {
  if (facts().dimension != 1) throw InputError("PROP-D1 needs a ring of dimension 1");
  if (!q_.ring()->is_monomial()) throw UnsupportedOperation("PROP-D1 needs the monomial backend");
  require_parameter();
  if (!is_m_primary(k_)) throw InputError("K must be m-primary");
  const auto& c = coefficients();
  const Integer h0 = h0_length_of_ideal(k_);
  return {make_verdict("PROP-D1", c.g[1], Relation::eq, -length_r_mod_k() - h0, {},
                       "l(H^0_m(K)) = " + h0.str())};
}

const LemmaUFacts& Analyzer::lemma_u_facts() {
  if (lemma_u_) return *lemma_u_;
  LemmaUFacts f;
  const auto& c = coefficients();
  if (facts().u_is_zero) {
    f.g_s = c.g;
    lemma_u_ = std::move(f);
    return *lemma_u_;
  }
  f.trivial = false;
  f.g_s = coefficients_of_s().g;
  const MonomialIdeal& u = *facts().u_lift;
  IdealHandle kq = k_;
  for (std::size_t n = 0; n <= c.last; ++n) {
    f.t_values.push_back(nested_length(intersect(kq.lift(), u), u));
    if (n < c.last) kq = product(kq, q_);
  }
  const int d = static_cast<int>(facts().dimension);
  f.t_degree = detect_degree(f.t_values, d, c.window);
  if (f.t_degree) f.t_poly = fit_binomial_polynomial(f.t_values, *f.t_degree, c.window, 1);
  lemma_u_ = std::move(f);
  return *lemma_u_;
}

std::vector<Verdict> Analyzer::lemma_u_comparison() {
  const auto& c = coefficients();
  const auto& f = lemma_u_facts();
  const int d = static_cast<int>(facts().dimension);
  if (f.trivial) {
    return {make_verdict("LEM-U-g0", c.g[0], Relation::eq, f.g_s[0], {}, "U = 0"),
            make_verdict("LEM-U-g1", c.g[1], Relation::eq, f.g_s[1], {}, "U = 0")};
  }
  const int dim_u = facts().u_dimension;
  const auto& cs = coefficients_of_s();
  std::size_t agree = 0;
  for (std::size_t n = 0; n < f.t_values.size(); ++n)
    if (f.t_values[n] == c.hk.values[n] - cs.hk.values[n]) ++agree;

  std::vector<Verdict> out;
  out.push_back(make_verdict("LEM-U-T", Integer(agree), Relation::eq, Integer(f.t_values.size()),
                             {}, "T(n) = l(R/KQ^n) - l(S/KQ^nS) for n = 0..N"));
  out.push_back(make_verdict("LEM-U-dim", f.t_degree ? *f.t_degree : -1, Relation::eq, dim_u, {},
                             "degree of T(n) equals dim U"));
  out.push_back(make_verdict("LEM-U-g0", c.g[0], Relation::eq, f.g_s[0]));
  if (dim_u == d - 1) {
    const Integer s0 = f.t_poly ? f.t_poly->coeffs[0] : Integer(0);
    out.push_back(make_verdict("LEM-U-g1", c.g[1], Relation::eq, f.g_s[1] - s0, {},
                               "dim U = d - 1, s_0 = " + s0.str()));
    out.push_back(make_verdict("LEM-U-s0", s0, Relation::ge, 1));
  } else {
    out.push_back(
        make_verdict("LEM-U-g1", c.g[1], Relation::eq, f.g_s[1], {}, "dim U <= d - 2"));
  }
  out.push_back(make_verdict("LEM-U-c", c.g[1], Relation::le, f.g_s[1]));
  out.push_back(make_iff("LEM-U-c-iff", c.g[1] == f.g_s[1], dim_u <= d - 2,
                         "g_1(Q) = g_1(QS) iff dim U <= d - 2"));
  return out;
}

UnmixedTheoremFacts Analyzer::unmixed_theorem_facts() {
  require_parameter();
  const auto& c = coefficients();
  const int d = static_cast<int>(facts().dimension);
  UnmixedTheoremFacts t;
  const Integer lku = length_r_mod_k_plus_u(), lqu = length_r_mod_q_plus_u();
  t.equality = c.g[0] + c.g[1] == lqu - lku;
  if (!facts().u_is_zero && !unmixedness(*s_ring()).unmixed)
    throw ComputationError("R/U_R(0) is not unmixed; decomposition is inconsistent");
  const auto& cs = coefficients_of_s();
  // l(S/KS) = l(R/(K+U)), l(S/QS) = l(R/(Q+U)); S is unmixed, so THM-c on S decides CM.
  t.s_cohen_macaulay = cs.g[0] + cs.g[1] >= lqu - lku;
  t.characterization = t.s_cohen_macaulay && facts().u_dimension <= d - 2;
  return t;
}

std::vector<Verdict> Analyzer::theorem_unmixed_component() {
  const auto t = unmixed_theorem_facts();
  const auto& c = coefficients();
  const int d = static_cast<int>(facts().dimension);
  const Integer lku = length_r_mod_k_plus_u(), lqu = length_r_mod_q_plus_u();
  Verdict b = make_verdict("THM-U-b", facts().u_dimension, Relation::le, d - 2, {},
                           std::string("R/U Cohen-Macaulay: ") +
                               (t.s_cohen_macaulay ? "yes" : "no"));
  b.holds = t.characterization;
  return {make_verdict("THM-U-a", c.g[0] + c.g[1], Relation::eq, lqu - lku),
          std::move(b),
          make_iff("THM-U-iff", t.equality, t.characterization,
                   "equality with K+U, Q+U lengths iff (R/U CM and dim U <= d - 2)")};
}

std::vector<Verdict> Analyzer::corollary_gi_values(bool pattern_only) {
  if (!pattern_only) require_parameter();
  const auto& c = coefficients();
  const Integer lk = length_r_mod_k();
  const Integer base = c.g[0] - length_r_mod_q_plus_u() + length_r_mod_k_plus_u();
  std::vector<Verdict> out;
  const int d = static_cast<int>(facts().dimension);
  for (int i = 1; i <= d; ++i)
    out.push_back(make_verdict("COR-GI", c.g[static_cast<std::size_t>(i)], Relation::eq,
                               sign_power(i) * base, i));
  for (int i = 1; i <= d; ++i)
    out.push_back(make_verdict("PROP-CM-GI", c.g[static_cast<std::size_t>(i)], Relation::eq,
                               sign_power(i) * lk, i));
  return out;
}

// ---------------------------------------------------------------------------

WindowDiagnostic Analyzer::superficial_window_check(const ExponentVector& x, std::size_t c,
                                                    std::size_t last) {
  if (!q_.ring()->is_monomial())
    throw UnsupportedOperation("the superficial window check needs the monomial backend");
  if (c == 0) throw InputError("the superficial constant c must be positive");
  if (!contains(q_, x)) throw InputError("the element must lie in Q");
  WindowDiagnostic w{c, last, {}, {}};
  const MonomialIdeal qc = power(q_, static_cast<unsigned>(c)).lift();

  auto scan = [&](const IdealHandle& k, std::vector<std::size_t>& failing) {
    IdealHandle prev = product(k, power(q_, static_cast<unsigned>(c)));
    for (std::size_t n = c + 1; n <= last; ++n) {
      IdealHandle current = product(prev, q_);
      const MonomialIdeal lhs = intersect(colon(current.lift(), x), qc);
      if (!(lhs == prev.lift())) failing.push_back(n);
      prev = std::move(current);
    }
  };
  scan(k_, w.failing_fiber);
  scan(IdealHandle::unit(q_.ring()), w.failing_graded);
  return w;
}

ReductionDiagnostic Analyzer::reduction_lemma_check(const ExponentVector& x, std::size_t c) {
  const std::size_t d = facts().dimension;
  if (d < 2) throw InputError("the reduction lemma check needs d >= 2");
  ReductionDiagnostic r;
  const auto& coeffs = coefficients();
  r.window = superficial_window_check(x, c, coeffs.last);
  r.hypothesis_verified = r.window.passed();

  auto reduced = make_ring(reduce_mod_element(*q_.ring(), x));
  if (ring_dimension(*reduced) != d - 1) {
    r.note = "R/(x) does not have dimension d - 1; x is not part of a system of parameters";
    r.hypothesis_verified = false;
    return r;
  }
  try {
    r.torsion = torsion_length(*q_.ring(), x);
  } catch (const InfiniteLength&) {
    r.note = "0 : x has infinite length; x cannot be superficial";
    r.hypothesis_verified = false;
    return r;
  }
  FitSettings fit = options_.fit;
  const auto bar = extract_coefficients(push_forward(q_, reduced), push_forward(k_, reduced),
                                        fit, cache_);
  r.g_reduced = bar.g;
  const int top = static_cast<int>(d) - 1;
  for (int i = 0; i <= top; ++i) {
    const auto u = static_cast<std::size_t>(i);
    Integer expected = coeffs.g[u];
    if (i == top) expected += sign_power(top) * *r.torsion;
    r.verdicts.push_back(make_verdict("LEM-RED", bar.g[u], Relation::eq, expected, i));
  }
  if (!r.hypothesis_verified)
    r.note = "superficiality window failed: the comparison is unverified-hypothesis";
  return r;
}

// ---------------------------------------------------------------------------

const Verdict* AnalysisReport::find(const std::string& id, std::optional<int> index) const {
  for (const auto& v : verdicts)
    if (v.id == id && (!index || v.index == index)) return &v;
  return nullptr;
}

AnalysisReport analyze(Analyzer& analyzer) {
  AnalysisReport report;
  report.ring = analyzer.facts();
  report.coefficients = analyzer.coefficients();
  report.q_is_parameter = analyzer.q_is_parameter();
  report.depth_flag = analyzer.options().depth_flag;
  report.length_r_mod_k = analyzer.length_r_mod_k();
  report.length_r_mod_q = analyzer.length_r_mod_q();
  report.length_r_mod_k_plus_u = analyzer.length_r_mod_k_plus_u();
  report.length_r_mod_q_plus_u = analyzer.length_r_mod_q_plus_u();

  auto append = [&](std::vector<Verdict> vs) {
    for (auto& v : vs) report.verdicts.push_back(std::move(v));
  };
  const bool monomial = analyzer.q().ring()->is_monomial();
  if (report.q_is_parameter) {
    const auto& c = report.coefficients;
    append({make_verdict("PARAM-E0", c.e[0], Relation::le, report.length_r_mod_q, {},
                         "e_0(Q) <= l(R/Q) for a parameter ideal")});
    append(analyzer.theorem_main());
    append(analyzer.negativity_bounds());
    append(analyzer.e1_corollary());
    append(analyzer.theorem_unmixed_component());
    append(analyzer.corollary_gi_values(false));
    append(analyzer.lemma_u_comparison());
    if (monomial && report.ring.dimension == 1) append(analyzer.prop_dim1());
    report.cohen_macaulay = analyzer.cohen_macaulay_by_main_theorem();
    report.unmixed_theorem = analyzer.unmixed_theorem_facts();
  } else {
    report.notes.push_back(
        "Q is not a parameter ideal; theorem-level statements are skipped and g_i patterns are "
        "reported in pattern-only mode");
    append(analyzer.corollary_gi_values(true));
    append(analyzer.lemma_u_comparison());
  }
  if (!report.ring.u_is_zero) report.lemma_u = analyzer.lemma_u_facts();
  report.notes.push_back(report.ring.unmixedness.domain
                             ? "unmixedness: semigroup ring is a domain"
                             : "unmixedness: presented-ring criterion");
  return report;
}

}  // namespace hilbco
