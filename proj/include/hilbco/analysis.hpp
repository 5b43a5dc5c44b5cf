#pragma once

// Evaluates the Cohen-Macaulayness criteria for Hilbert coefficients of a
// parameter ideal Q inside an m-primary K on a concrete presented ring.
//
// Verdict ids:
//   THM-b, THM-c, THM-d, THM-e   main characterization (unmixed R: each holds iff R is CM)
//   COR-NEG-a1/a2, COR-NEG-b1/b2 universal and depth d-1 strict bounds
//   COR-E1-a, COR-E1-b, COR-E1-sum   e_1 <= 0, e_1 < 0, and g_0 + g_1 = e_1 for K = Q
//   PROP-D1                      g_1 = -l(R/K) - l(H^0_m(K)) when d = 1
//   LEM-U-*                      comparison of R with S = R/U, U = U_R(0)
//   THM-U-a, THM-U-b, THM-U-iff  equality with K+U, Q+U lengths and its characterization
//   COR-GI, PROP-CM-GI           g_i patterns
//
// Unmixedness is decided on the presented ring through its monomial primary
// decomposition; semigroup rings are domains and therefore unmixed.

#include <optional>
#include <string>
#include <vector>

#include "hilbco/hilbert.hpp"

namespace hilbco {

enum class Relation { eq, le, ge, lt, gt, iff };

std::string to_string(Relation r);

struct Verdict {
  std::string id;
  Integer lhs;
  Integer rhs;
  Relation relation = Relation::eq;
  bool holds = false;
  std::optional<int> index;
  std::string note;
};

Verdict make_verdict(std::string id, Integer lhs, Relation rel, Integer rhs,
                     std::optional<int> index = {}, std::string note = {});

struct Unmixedness {
  bool unmixed = true;
  std::vector<MonomialPrime> ass;
  std::vector<MonomialPrime> assh;
  /// Set for semigroup rings, which are decided by being domains.
  bool domain = false;
};

Unmixedness unmixedness(const RingPresentation& ring);

struct RingFacts {
  std::size_t dimension = 0;
  Unmixedness unmixedness;
  bool u_is_zero = true;
  /// Ambient lift of U_R(0) (monomial backend, U != 0).
  std::optional<MonomialIdeal> u_lift;
  /// Krull dimension of the module U; -1 for U = 0.
  int u_dimension = -1;
};

RingFacts ring_facts(const RingPresentation& ring);

struct AnalysisOptions {
  FitSettings fit;
  LengthOptions length;
  /// Caller's assertion that depth R = d - 1; enables the strict bounds.
  bool depth_flag = false;
};

struct WindowDiagnostic {
  std::size_t c = 0;
  std::size_t last = 0;
  /// n in (c, N] with (KQ^n : x) cap Q^c != KQ^{n-1}.
  std::vector<std::size_t> failing_fiber;
  /// Same test with K = R, the associated graded ring window.
  std::vector<std::size_t> failing_graded;
  bool passed() const { return failing_fiber.empty() && failing_graded.empty(); }
};

struct ReductionDiagnostic {
  bool hypothesis_verified = false;
  WindowDiagnostic window;
  std::optional<Integer> torsion;
  std::vector<Integer> g_reduced;
  std::vector<Verdict> verdicts;
  std::string note;
};

struct LemmaUFacts {
  bool trivial = true;  // U = 0
  std::vector<Integer> t_values;
  std::optional<int> t_degree;
  std::optional<BinomialPolynomial> t_poly;
  std::vector<Integer> g_s;
};

struct UnmixedTheoremFacts {
  bool equality = false;
  bool s_cohen_macaulay = false;
  bool characterization = false;
};

class Analyzer {
 public:
  Analyzer(IdealHandle q, IdealHandle k, AnalysisOptions options = {});

  const IdealHandle& q() const noexcept { return q_; }
  const IdealHandle& k() const noexcept { return k_; }
  const AnalysisOptions& options() const noexcept { return options_; }
  LengthCache& cache() noexcept { return cache_; }

  const RingFacts& facts();
  const CoefficientReport& coefficients();
  const CoefficientReport& coefficients_k_equals_q();
  bool q_is_parameter();

  Integer length_r_mod_k();
  Integer length_r_mod_q();
  Integer length_r_mod_k_plus_u();
  Integer length_r_mod_q_plus_u();

  std::vector<Verdict> theorem_main();
  /// Some(CM) when R is unmixed, decided by THM-c.
  std::optional<bool> cohen_macaulay_by_main_theorem();
  std::vector<Verdict> negativity_bounds();
  std::vector<Verdict> e1_corollary();
  std::vector<Verdict> prop_dim1();
  std::vector<Verdict> lemma_u_comparison();
  const LemmaUFacts& lemma_u_facts();
  std::vector<Verdict> theorem_unmixed_component();
  UnmixedTheoremFacts unmixed_theorem_facts();
  std::vector<Verdict> corollary_gi_values(bool pattern_only = false);

  WindowDiagnostic superficial_window_check(const ExponentVector& x, std::size_t c,
                                            std::size_t last);
  ReductionDiagnostic reduction_lemma_check(const ExponentVector& x, std::size_t c);

 private:
  void require_parameter();
  const CoefficientReport& coefficients_of_s();
  RingPtr s_ring();

  IdealHandle q_, k_;
  AnalysisOptions options_;
  LengthCache cache_;
  std::optional<RingFacts> facts_;
  std::optional<CoefficientReport> coeffs_, coeffs_qq_, coeffs_s_;
  std::optional<LemmaUFacts> lemma_u_;
  std::optional<bool> parameter_;
  RingPtr s_ring_;
};

struct AnalysisReport {
  RingFacts ring;
  bool q_is_parameter = false;
  Integer length_r_mod_k, length_r_mod_q, length_r_mod_k_plus_u, length_r_mod_q_plus_u;
  CoefficientReport coefficients;
  std::vector<Verdict> verdicts;
  std::optional<bool> cohen_macaulay;
  std::optional<LemmaUFacts> lemma_u;
  std::optional<UnmixedTheoremFacts> unmixed_theorem;
  bool depth_flag = false;
  std::vector<std::string> notes;

  /// First verdict with this id (and index, when given).
  const Verdict* find(const std::string& id, std::optional<int> index = {}) const;
};

/// Runs every statement applicable to (R, Q, K).
AnalysisReport analyze(Analyzer& analyzer);

}  // namespace hilbco
