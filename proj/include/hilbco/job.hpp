#pragma once

// Batch jobs: JSON job specifications, monomial expression parsing, report
// emission and the built-in presets.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hilbco/analysis.hpp"

namespace hilbco {

using Json = nlohmann::json;

/// Parses `factor ('*' factor)*` with `factor := var ('^' uint)?`. Spaces
/// are ignored; the literal "1" denotes the empty product. Errors carry a
/// 1-based column.
ExponentVector parse_monomial_expr(const std::string& text,
                                   const std::vector<std::string>& variables);

/// Canonical text for a monomial: "x^2*y", or "1" for the zero vector.
std::string format_monomial(const ExponentVector& v, const std::vector<std::string>& variables);

struct RingSpec {
  enum class Kind { monomial, semigroup };
  Kind kind = Kind::monomial;
  std::vector<std::string> variables;        // monomial
  std::vector<ExponentVector> relations;     // monomial, generators of I0
  std::size_t semigroup_dim = 0;             // semigroup
  std::vector<ExponentVector> generators;    // semigroup

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct DiagnosticsSpec {
  ExponentVector x;
  std::size_t c = 1;

  friend bool operator==(const DiagnosticsSpec&, const DiagnosticsSpec&) = default;
};

struct JobOptions {
  std::optional<std::size_t> n;
  std::optional<int> window;
  std::optional<Exponent> semigroup_bound;
  int certification_retries = 1;
  bool depth_flag = false;
  bool huneke = false;
  std::optional<DiagnosticsSpec> diagnostics;

  friend bool operator==(const JobOptions&, const JobOptions&) = default;
};

struct JobSpec {
  std::string name;
  RingSpec ring;
  std::vector<ExponentVector> q;
  /// Defaults to Q when absent.
  std::optional<std::vector<ExponentVector>> k;
  std::optional<std::vector<ExponentVector>> j;
  JobOptions options;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

JobSpec job_from_json(const Json& j);
Json job_to_json(const JobSpec& spec);
JobSpec load_job(const std::string& path);

/// Ring and ideals built from a spec; Q is checked to lie in K.
struct MaterializedJob {
  RingPtr ring;
  IdealHandle q, k;
  std::optional<IdealHandle> j;
};

MaterializedJob materialize(const JobSpec& spec);
AnalysisOptions analysis_options(const JobSpec& spec);

struct RunSettings {
  bool full = false;
};

struct JobResult {
  Json report;
  int exit_code = 0;
};

/// Runs the coefficient extraction and every applicable statement. Input
/// errors give exit code 1 and computation errors exit code 2; in both
/// cases the report carries an "error" object.
JobResult run_job(const JobSpec& spec, const RunSettings& settings = {});

/// Human-readable rendering of a successful report.
std::string render_text(const Json& report);

/// Converts to a JSON integer; throws ComputationError beyond 64 bits.
Json integer_json(const Integer& value);

std::vector<std::string> preset_names();
JobSpec preset(const std::string& name);

}  // namespace hilbco
