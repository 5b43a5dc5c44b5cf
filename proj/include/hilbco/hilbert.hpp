#pragma once

// Hilbert-Samuel functions n -> l(R/Q^n), n -> l(R/KQ^n) and the fiber
// function n -> l(Q^n/KQ^n), their polynomials in the binomial basis, and
// the coefficients e_i, g_i, f_i.

#include <optional>
#include <string>
#include <vector>

#include "hilbco/ring.hpp"

namespace hilbco {

enum class SequenceKind { hilbert_samuel, hilbert_K, fiber, module };

std::string to_string(SequenceKind kind);

struct HilbertSequence {
  SequenceKind kind = SequenceKind::hilbert_samuel;
  std::vector<Integer> values;
  bool certified = true;
};

/// Generalized binomial coefficient C(top, k) for any integer top.
Integer binomial(const Integer& top, unsigned k);

/// p(n) = sum_{i=0}^{degree} (-1)^i c_i C(n + shift + degree - i - 1, degree - i).
///
/// shift = 0 is the basis of the Hilbert-Samuel polynomial and of P_K;
/// shift = 1 is the basis used for the fiber polynomial and for module
/// length polynomials written as s_0 C(n+t, t) - s_1 C(n+t-1, t-1) + ...
struct BinomialPolynomial {
  int degree = 0;
  int shift = 0;
  std::vector<Integer> coeffs;
  /// Least n0 such that the fitted sequence equals p(n) for all n0 <= n <= N.
  std::size_t postulation = 0;

  Integer operator()(const Integer& n) const;
};

BinomialPolynomial make_binomial_polynomial(std::vector<Integer> coeffs, int shift = 0);

/// Fits the sequence exactly on its trailing entries. Requires
/// N >= degree + 2 * window (N = last index). Throws NoStabilization when
/// the degree-th differences are not constant over the trailing `window`
/// entries and DegreeMismatch when the data look like a higher degree.
BinomialPolynomial fit_binomial_polynomial(const std::vector<Integer>& values, int degree,
                                           int window, int shift = 0);
/// Uses shift 1 for fiber and module sequences, 0 otherwise.
BinomialPolynomial fit_binomial_polynomial(const HilbertSequence& seq, int degree, int window);

/// Smallest degree t <= max_degree whose (t+1)-th differences vanish over
/// the trailing `window` entries; nullopt when none does.
std::optional<int> detect_degree(const std::vector<Integer>& values, int max_degree, int window);

HilbertSequence hk_sequence(const IdealHandle& q, const IdealHandle& k, std::size_t last,
                            LengthCache& cache);
HilbertSequence hs_sequence(const IdealHandle& q, std::size_t last, LengthCache& cache);
HilbertSequence fiber_sequence(const HilbertSequence& hk, const HilbertSequence& hs);

struct IdentityResult {
  std::string name;
  bool holds = false;
  Integer lhs;
  Integer rhs;
  std::optional<int> index;
};

struct FitSettings {
  std::optional<std::size_t> last;  // N
  std::optional<int> window;        // w
};

struct CoefficientReport {
  std::size_t dimension = 0;
  std::size_t last = 0;
  int window = 0;
  HilbertSequence hs, hk, fiber;
  BinomialPolynomial hs_poly, hk_poly, fiber_poly;
  std::vector<Integer> e, g, f;
  std::vector<IdentityResult> identities;
  bool certified = true;

  bool all_identities_hold() const;
};

/// Default N = max(4d + 10, 2 * (max generator degree) + 10) for monomial
/// rings; semigroup rings use 4d + 10.
std::size_t default_sequence_length(const IdealHandle& q, const IdealHandle& k, std::size_t d);
int default_window(std::size_t d);

/// Fits all three sequences of (R, Q, K) and checks the coefficient
/// identities g_0 = e_0, f_i = e_{i+1} - g_{i+1} + e_i - g_i, the
/// additivity P_K = P + P_F, and (when K = Q) the alternating sums
/// g_i = e_i - e_{i-1} + ... + (-1)^i e_0 together with P_K(n) = P(n+1).
CoefficientReport extract_coefficients(const IdealHandle& q, const IdealHandle& k,
                                       const FitSettings& settings, LengthCache& cache);
CoefficientReport extract_coefficients(const IdealHandle& q, const IdealHandle& k,
                                       const FitSettings& settings = {},
                                       const LengthOptions& options = {});

}  // namespace hilbco
