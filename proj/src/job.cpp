#include "hilbco/job.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "hilbco/huneke.hpp"

namespace hilbco {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  ExponentVector parse() {
    ExponentVector v(vars_.size());
    skip();
    if (at_end()) throw ParseError("empty monomial expression", column());
    if (text_[pos_] == '1') {
      const std::size_t start = column();
      ++pos_;
      skip();
      if (!at_end()) throw ParseError("'1' must stand alone", start);
      return v;
    }
    while (true) {
      factor(v);
      skip();
      if (at_end()) return v;
      if (text_[pos_] != '*') throw ParseError("expected '*' between factors", column());
      ++pos_;
      skip();
      if (at_end()) throw ParseError("expected a variable after '*'", column());
    }
  }

 private:
  void factor(ExponentVector& v) {
    const std::size_t start = column();
    if (!ident_start(text_[pos_])) throw ParseError("expected a variable", start);
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    const std::string name = text_.substr(pos_, end - pos_);
    pos_ = end;
    std::size_t index = vars_.size();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) index = i;
    if (index == vars_.size()) throw ParseError("unknown variable '" + name + "'", start);

    std::uint64_t exponent = 1;
    skip();
    if (!at_end() && text_[pos_] == '^') {
      const std::size_t caret = column();
      ++pos_;
      skip();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("malformed exponent", caret);
      exponent = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        exponent = exponent * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (exponent > std::numeric_limits<Exponent>::max())
          throw ParseError("exponent too large", caret);
        ++pos_;
      }
    }
    const std::uint64_t total = v[index] + exponent;
    if (total > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", start);
    v[index] = static_cast<Exponent>(total);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t column() const { return pos_ + 1; }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw InputError("unknown key '" + key + "' in " + where);
}

ExponentVector vector_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an integer array");
  if (dim != 0 && j.size() != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " entries");
  std::vector<Exponent> entries;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
      throw InputError(where + ": entries must be non-negative integers");
    const auto value = x.get<std::uint64_t>();
    if (value > std::numeric_limits<Exponent>::max()) throw InputError(where + ": entry too large");
    entries.push_back(static_cast<Exponent>(value));
  }
  return ExponentVector(std::move(entries));
}

ExponentVector element_from_json(const Json& j, const RingSpec& ring, const std::string& where) {
  if (ring.kind == RingSpec::Kind::semigroup) return vector_from_json(j, ring.semigroup_dim, where);
  if (!j.is_string()) throw InputError(where + ": expected a monomial expression string");
  try {
    return parse_monomial_expr(j.get<std::string>(), ring.variables);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + j.get<std::string>() + ": " +
                         std::string(e.what()).substr(0, std::string(e.what()).rfind(" at column")),
                     e.column());
  }
}

std::vector<ExponentVector> elements_from_json(const Json& j, const RingSpec& ring,
                                               const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array");
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(element_from_json(j[i], ring, where + "[" + std::to_string(i) + "]"));
  return out;
}

Json element_to_json(const ExponentVector& v, const RingSpec& ring) {
  if (ring.kind == RingSpec::Kind::semigroup) {
    Json arr = Json::array();
    for (Exponent x : v) arr.push_back(x);
    return arr;
  }
  return format_monomial(v, ring.variables);
}

Json elements_to_json(const std::vector<ExponentVector>& vs, const RingSpec& ring) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(element_to_json(v, ring));
  return arr;
}

RingSpec ring_from_json(const Json& j) {
  reject_unknown_keys(j, {"kind", "variables", "relations", "generators"}, "ring");
  RingSpec r;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "monomial") {
    r.kind = RingSpec::Kind::monomial;
    if (j.contains("generators")) throw InputError("monomial rings take 'relations', not 'generators'");
    r.variables = j.at("variables").get<std::vector<std::string>>();
    if (r.variables.empty()) throw InputError("ring.variables must be non-empty");
    for (const auto& v : r.variables) {
      if (v.empty() || !ident_start(v[0]) ||
          !std::all_of(v.begin(), v.end(), [](char c) { return ident_char(c); }))
        throw InputError("invalid variable name '" + v + "'");
    }
    if (j.contains("relations")) r.relations = elements_from_json(j.at("relations"), r, "ring.relations");
  } else if (kind == "semigroup") {
    r.kind = RingSpec::Kind::semigroup;
    if (j.contains("variables") || j.contains("relations"))
      throw InputError("semigroup rings take only 'generators'");
    const Json& gens = j.at("generators");
    if (!gens.is_array() || gens.empty() || !gens[0].is_array() || gens[0].empty())
      throw InputError("ring.generators must be a non-empty array of integer vectors");
    r.semigroup_dim = gens[0].size();
    r.generators = elements_from_json(gens, r, "ring.generators");
  } else {
    throw InputError("ring.kind must be 'monomial' or 'semigroup'");
  }
  return r;
}

Json ring_to_json(const RingSpec& r) {
  Json j;
  if (r.kind == RingSpec::Kind::monomial) {
    j["kind"] = "monomial";
    j["variables"] = r.variables;
    j["relations"] = elements_to_json(r.relations, r);
  } else {
    j["kind"] = "semigroup";
    j["generators"] = elements_to_json(r.generators, r);
  }
  return j;
}

template <typename T>
T checked_get(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("options." + key + " has the wrong type");
  }
}

JobOptions options_from_json(const Json& j, const RingSpec& ring) {
  reject_unknown_keys(j,
                      {"N", "window", "semigroup_bound", "certification_retries", "depth_flag",
                       "huneke", "diagnostics"},
                      "options");
  JobOptions o;
  if (j.contains("N")) o.n = checked_get<std::size_t>(j, "N");
  if (j.contains("window")) {
    o.window = checked_get<int>(j, "window");
    if (*o.window < 1) throw InputError("options.window must be positive");
  }
  if (j.contains("semigroup_bound")) {
    o.semigroup_bound = checked_get<Exponent>(j, "semigroup_bound");
    if (*o.semigroup_bound == 0) throw InputError("options.semigroup_bound must be positive");
  }
  if (j.contains("certification_retries")) {
    o.certification_retries = checked_get<int>(j, "certification_retries");
    if (o.certification_retries < 0) throw InputError("options.certification_retries must be >= 0");
  }
  if (j.contains("depth_flag")) o.depth_flag = checked_get<bool>(j, "depth_flag");
  if (j.contains("huneke")) o.huneke = checked_get<bool>(j, "huneke");
  if (j.contains("diagnostics")) {
    const Json& d = j.at("diagnostics");
    reject_unknown_keys(d, {"x", "c"}, "options.diagnostics");
    DiagnosticsSpec ds;
    ds.x = element_from_json(d.at("x"), ring, "options.diagnostics.x");
    if (d.contains("c")) ds.c = checked_get<std::size_t>(d, "c");
    o.diagnostics = std::move(ds);
  }
  return o;
}

Json options_to_json(const JobOptions& o, const RingSpec& ring) {
  Json j = Json::object();
  if (o.n) j["N"] = *o.n;
  if (o.window) j["window"] = *o.window;
  if (o.semigroup_bound) j["semigroup_bound"] = *o.semigroup_bound;
  j["certification_retries"] = o.certification_retries;
  j["depth_flag"] = o.depth_flag;
  j["huneke"] = o.huneke;
  if (o.diagnostics)
    j["diagnostics"] = {{"x", element_to_json(o.diagnostics->x, ring)}, {"c", o.diagnostics->c}};
  return j;
}

// ---------------------------------------------------------------------------

Json integers_json(const std::vector<Integer>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(integer_json(v));
  return arr;
}

Json optional_index(const std::optional<int>& i) { return i ? Json(*i) : Json(nullptr); }

Json polynomial_json(const BinomialPolynomial& p) {
  return {{"degree", p.degree},
          {"shift", p.shift},
          {"coefficients", integers_json(p.coeffs)},
          {"postulation", p.postulation}};
}

Json verdict_json(const Verdict& v) {
  Json j{{"id", v.id},
         {"lhs", integer_json(v.lhs)},
         {"rhs", integer_json(v.rhs)},
         {"relation", to_string(v.relation)},
         {"holds", v.holds},
         {"index", optional_index(v.index)}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json verdicts_json(const std::vector<Verdict>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(verdict_json(v));
  return arr;
}

Json prime_json(const MonomialPrime& p, const std::vector<std::string>& vars) {
  Json arr = Json::array();
  for (std::size_t i : p) arr.push_back(vars[i]);
  return arr;
}

Json coefficients_json(const CoefficientReport& c, bool full) {
  Json j{{"dimension", c.dimension},
         {"N", c.last},
         {"window", c.window},
         {"e", integers_json(c.e)},
         {"g", integers_json(c.g)},
         {"f", integers_json(c.f)},
         {"certified", c.certified},
         {"polynomials",
          {{"hilbert_samuel", polynomial_json(c.hs_poly)},
           {"hilbert_K", polynomial_json(c.hk_poly)},
           {"fiber", polynomial_json(c.fiber_poly)}}}};
  Json ids = Json::array();
  for (const auto& r : c.identities)
    ids.push_back({{"name", r.name},
                   {"index", optional_index(r.index)},
                   {"lhs", integer_json(r.lhs)},
                   {"rhs", integer_json(r.rhs)},
                   {"holds", r.holds}});
  j["identities"] = std::move(ids);
  j["identities_hold"] = c.all_identities_hold();
  if (full)
    j["sequences"] = {{"hilbert_samuel", integers_json(c.hs.values)},
                      {"hilbert_K", integers_json(c.hk.values)},
                      {"fiber", integers_json(c.fiber.values)}};
  return j;
}

Json report_json(const JobSpec& spec, const MaterializedJob& job, const AnalysisReport& r,
                 bool full) {
  Json out;
  out["schema"] = "hilbco/1";
  out["input"] = job_to_json(spec);

  Json ring{{"dimension", r.ring.dimension},
            {"unmixed", r.ring.unmixedness.unmixed},
            {"domain", r.ring.unmixedness.domain},
            {"u_is_zero", r.ring.u_is_zero},
            {"u_dimension", r.ring.u_is_zero ? Json(nullptr) : Json(r.ring.u_dimension)}};
  if (job.ring->is_monomial()) {
    const auto& vars = job.ring->monomial().variables;
    Json ass = Json::array(), assh = Json::array();
    for (const auto& p : r.ring.unmixedness.ass) ass.push_back(prime_json(p, vars));
    for (const auto& p : r.ring.unmixedness.assh) assh.push_back(prime_json(p, vars));
    ring["ass"] = std::move(ass);
    ring["assh"] = std::move(assh);
    if (r.ring.u_lift) {
      Json gens = Json::array();
      for (const auto& g : r.ring.u_lift->generators())
        if (!contains(job.ring->monomial().relations, g)) gens.push_back(format_monomial(g, vars));
      ring["u_generators"] = std::move(gens);
    }
  }
  out["ring"] = std::move(ring);
  out["q_is_parameter"] = r.q_is_parameter;
  out["lengths"] = {{"R/K", integer_json(r.length_r_mod_k)},
                    {"R/Q", integer_json(r.length_r_mod_q)},
                    {"R/(K+U)", integer_json(r.length_r_mod_k_plus_u)},
                    {"R/(Q+U)", integer_json(r.length_r_mod_q_plus_u)}};
  out["coefficients"] = coefficients_json(r.coefficients, full);
  out["verdicts"] = verdicts_json(r.verdicts);
  out["cohen_macaulay"] = r.cohen_macaulay ? Json(*r.cohen_macaulay) : Json(nullptr);
  out["depth_flag"] = r.depth_flag;
  out["certified"] = r.coefficients.certified;
  out["notes"] = r.notes;
  if (r.lemma_u) {
    Json l{{"t_degree", r.lemma_u->t_degree ? Json(*r.lemma_u->t_degree) : Json(nullptr)},
           {"g_s", integers_json(r.lemma_u->g_s)}};
    if (r.lemma_u->t_poly) l["t_polynomial"] = polynomial_json(*r.lemma_u->t_poly);
    if (full) l["t_values"] = integers_json(r.lemma_u->t_values);
    out["lemma_u"] = std::move(l);
  }
  if (r.unmixed_theorem)
    out["unmixed_theorem"] = {{"equality", r.unmixed_theorem->equality},
                              {"s_cohen_macaulay", r.unmixed_theorem->s_cohen_macaulay},
                              {"characterization", r.unmixed_theorem->characterization}};
  return out;
}

Json window_json(const WindowDiagnostic& w) {
  return {{"c", w.c},
          {"N", w.last},
          {"failing_fiber", w.failing_fiber},
          {"failing_graded", w.failing_graded},
          {"passed", w.passed()}};
}

Json error_json(const std::string& kind, const std::exception& e) {
  Json j{{"kind", kind}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) j["column"] = p->column();
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

ExponentVector parse_monomial_expr(const std::string& text,
                                   const std::vector<std::string>& variables) {
  return ExprParser(text, variables).parse();
}

std::string format_monomial(const ExponentVector& v, const std::vector<std::string>& variables) {
  if (v.size() != variables.size()) throw AmbientMismatch(variables.size(), v.size());
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[i];
    if (v[i] > 1) out += '^' + std::to_string(v[i]);
  }
  return out.empty() ? "1" : out;
}

JobSpec job_from_json(const Json& j) {
  try {
    reject_unknown_keys(j, {"schema", "name", "ring", "Q", "K", "J", "options"}, "job");
    if (j.contains("schema") && j.at("schema") != "hilbco/1")
      throw InputError("unsupported schema; expected \"hilbco/1\"");
    JobSpec spec;
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    spec.ring = ring_from_json(j.at("ring"));
    spec.q = elements_from_json(j.at("Q"), spec.ring, "Q");
    if (spec.q.empty()) throw InputError("Q must have at least one generator");
    if (j.contains("K")) spec.k = elements_from_json(j.at("K"), spec.ring, "K");
    if (j.contains("J")) spec.j = elements_from_json(j.at("J"), spec.ring, "J");
    if (j.contains("options")) spec.options = options_from_json(j.at("options"), spec.ring);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid job specification: ") + e.what());
  }
}

Json job_to_json(const JobSpec& spec) {
  Json j;
  j["schema"] = "hilbco/1";
  if (!spec.name.empty()) j["name"] = spec.name;
  j["ring"] = ring_to_json(spec.ring);
  j["Q"] = elements_to_json(spec.q, spec.ring);
  if (spec.k) j["K"] = elements_to_json(*spec.k, spec.ring);
  if (spec.j) j["J"] = elements_to_json(*spec.j, spec.ring);
  j["options"] = options_to_json(spec.options, spec.ring);
  return j;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return job_from_json(j);
}

MaterializedJob materialize(const JobSpec& spec) {
  RingPtr ring;
  if (spec.ring.kind == RingSpec::Kind::monomial) {
    const std::size_t m = spec.ring.variables.size();
    ring = make_ring(RingPresentation(spec.ring.variables, MonomialIdeal(m, spec.ring.relations)));
  } else {
    ring = make_ring(
        RingPresentation(AffineSemigroup(spec.ring.semigroup_dim, spec.ring.generators)));
  }
  IdealHandle q(ring, spec.q);
  IdealHandle k = spec.k ? IdealHandle(ring, *spec.k) : q;
  if (!contains(k, q)) throw InputError("Q must be contained in K");
  std::optional<IdealHandle> j;
  if (spec.j) j = IdealHandle(ring, *spec.j);
  return {ring, q, k, j};
}

AnalysisOptions analysis_options(const JobSpec& spec) {
  AnalysisOptions o;
  o.fit.last = spec.options.n;
  o.fit.window = spec.options.window;
  o.length.semigroup_bound = spec.options.semigroup_bound;
  o.length.certification_retries = spec.options.certification_retries;
  o.depth_flag = spec.options.depth_flag;
  return o;
}

Json integer_json(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw ComputationError("integer " + value.str() + " does not fit in a JSON 64-bit integer");
  return Json(static_cast<std::int64_t>(value));
}

JobResult run_job(const JobSpec& spec, const RunSettings& settings) {
  JobResult result;
  try {
    const auto job = materialize(spec);
    Analyzer analyzer(job.q, job.k, analysis_options(spec));
    const auto report = analyze(analyzer);
    result.report = report_json(spec, job, report, settings.full);

    if (spec.options.huneke) {
      if (!job.j) throw InputError("the huneke route needs a reduction J");
      const std::size_t last = report.coefficients.last;
      const auto v = v_sequence(job.q, job.k, *job.j, last, analyzer.cache());
      const auto [g1, g2] = g12_from_v(v, report.length_r_mod_k);
      const auto& g = report.coefficients.g;
      result.report["huneke"] = {{"v", integers_json(v.values)},
                                 {"tail_zero_from", v.tail_zero_from},
                                 {"reduction_number", v.reduction_number},
                                 {"cm_warning", v.cm_warning},
                                 {"g1", integer_json(g1)},
                                 {"g2", integer_json(g2)},
                                 {"agrees_with_fit", g1 == g[1] && g2 == g[2]}};
    }
    if (spec.options.diagnostics) {
      const auto& d = *spec.options.diagnostics;
      Json diag;
      if (report.ring.dimension >= 2) {
        const auto red = analyzer.reduction_lemma_check(d.x, d.c);
        diag["window"] = window_json(red.window);
        diag["hypothesis_verified"] = red.hypothesis_verified;
        diag["torsion"] = red.torsion ? integer_json(*red.torsion) : Json(nullptr);
        diag["g_reduced"] = integers_json(red.g_reduced);
        diag["verdicts"] = verdicts_json(red.verdicts);
        if (!red.note.empty()) diag["note"] = red.note;
      } else {
        diag["window"] =
            window_json(analyzer.superficial_window_check(d.x, d.c, report.coefficients.last));
      }
      result.report["diagnostics"] = std::move(diag);
    }
    result.exit_code = 0;
  } catch (const InputError& e) {
    result.report = {{"schema", "hilbco/1"}, {"error", error_json("input", e)}};
    result.exit_code = 1;
  } catch (const ComputationError& e) {
    result.report = {{"schema", "hilbco/1"}, {"error", error_json("computation", e)}};
    result.exit_code = 2;
  }
  if (result.exit_code != 0) {
    try {
      result.report["input"] = job_to_json(spec);
    } catch (const Error&) {
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::string render_text(const Json& report) {
  std::ostringstream os;
  if (report.contains("error")) {
    os << report["error"]["kind"].get<std::string>()
       << " error: " << report["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  auto list = [](const Json& arr) {
    std::string s = "(";
    for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].dump();
    return s + ")";
  };
  const auto& c = report["coefficients"];
  const auto& ring = report["ring"];
  if (report["input"].contains("name")) os << report["input"]["name"].get<std::string>() << "\n";
  os << "dimension " << ring["dimension"] << ", unmixed " << ring["unmixed"] << ", Q parameter "
     << report["q_is_parameter"] << "\n";
  os << "N = " << c["N"] << ", window = " << c["window"]
     << ", certified = " << c["certified"] << "\n";
  os << "e = " << list(c["e"]) << "\n"
     << "g = " << list(c["g"]) << "\n"
     << "f = " << list(c["f"]) << "\n";
  os << "postulation: P " << c["polynomials"]["hilbert_samuel"]["postulation"] << ", P_K "
     << c["polynomials"]["hilbert_K"]["postulation"] << ", P_F "
     << c["polynomials"]["fiber"]["postulation"] << "\n";
  const auto& l = report["lengths"];
  os << "l(R/K) = " << l["R/K"] << ", l(R/Q) = " << l["R/Q"] << ", l(R/(K+U)) = " << l["R/(K+U)"]
     << ", l(R/(Q+U)) = " << l["R/(Q+U)"] << "\n";
  os << "identities " << (c["identities_hold"].get<bool>() ? "hold" : "FAIL") << "\n";
  for (const auto& v : report["verdicts"]) {
    os << "  " << (v["holds"].get<bool>() ? "holds " : "fails ") << v["id"].get<std::string>();
    if (!v["index"].is_null()) os << "[" << v["index"] << "]";
    os << ": " << v["lhs"] << " " << v["relation"].get<std::string>() << " " << v["rhs"];
    if (v.contains("note")) os << "  (" << v["note"].get<std::string>() << ")";
    os << "\n";
  }
  if (!report["cohen_macaulay"].is_null())
    os << "Cohen-Macaulay: " << (report["cohen_macaulay"].get<bool>() ? "yes" : "no") << "\n";
  if (report.contains("huneke")) {
    const auto& h = report["huneke"];
    os << "huneke: v = " << list(h["v"]) << ", g1 = " << h["g1"] << ", g2 = " << h["g2"]
       << ", agrees with fit: " << h["agrees_with_fit"] << "\n";
  }
  if (report.contains("diagnostics")) os << "diagnostics: " << report["diagnostics"].dump() << "\n";
  for (const auto& n : report["notes"]) os << "note: " << n.get<std::string>() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<std::string> preset_names() { return {"paper-e1", "paper-semigroup", "paper-e3"}; }

JobSpec preset(const std::string& name) {
  JobSpec s;
  s.name = name;
  if (name == "paper-e1") {
    s.ring.variables = {"x", "y"};
    s.q = {{3, 0}, {2, 1}, {0, 3}};
    s.k = std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}};
    s.j = std::vector<ExponentVector>{{3, 0}, {0, 3}};
  } else if (name == "paper-semigroup") {
    s.ring.kind = RingSpec::Kind::semigroup;
    s.ring.semigroup_dim = 2;
    s.ring.generators = {{5, 0}, {1, 4}, {4, 1}, {0, 5}};
    s.q = {{5, 0}, {0, 5}};
    s.options.depth_flag = true;
  } else if (name == "paper-e3") {
    s.ring.variables = {"x", "y", "z"};
    s.ring.relations = {{0, 1, 1}, {2, 1, 0}, {0, 3, 0}};
    s.q = {{1, 0, 0}, {0, 0, 2}};
    s.k = std::vector<ExponentVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  } else {
    throw InputError("unknown preset '" + name + "'");
  }
  return s;
}

}  // namespace hilbco
