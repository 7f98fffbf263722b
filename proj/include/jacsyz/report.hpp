#pragma once

// End-to-end curve analysis with field selection, classification and
// statement checks, plus the JSON form of the result.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacsyz/classify.hpp"

namespace jacsyz {

inline constexpr int kReportSchemaVersion = 1;

/// How to pick the coefficient field.
struct FieldChoice {
  enum class Mode { Rational, Prime, Dual, Auto };
  Mode mode = Mode::Auto;
  std::uint64_t prime = 0;

  /// "rat", "fp:<p>", "dual" or "auto"; throws DomainError otherwise.
  static FieldChoice parse(const std::string& text);
  std::string name() const;
};

/// Rational for d <= 9, two independent primes above.
inline constexpr int kAutoRationalMaxDegree = 9;

/// The two primes of dual mode: the largest two below 2^62.
std::pair<std::uint64_t, std::uint64_t> dual_primes();

struct CurveChecks {
  std::optional<bool> tau_bound;     // tau <= tau_max
  std::optional<bool> equivalence;     // equivalence, when d/2 <= r <= d-1
  std::optional<bool> thresholds;   // thresholds, for maximal Tjurina curves with r >= d/2
  std::optional<bool> deg_z_formula;  // deg Z = (d-1)^2 - r(d-r-1) - tau
  std::optional<bool> deg_z_equality;  // deg Z = C(2r-d+2, 2), for maximal Tjurina curves
  std::vector<std::string> violations;

  bool properties_hold() const { return violations.empty(); }
  friend bool operator==(const CurveChecks&, const CurveChecks&) = default;
};

struct CurveReport {
  std::string polynomial;       // canonical text over Q
  std::string family;           // empty for free text
  int param = 0;
  std::string field;            // "rat", "fp:<p>" or "dual:<p1>,<p2>"
  bool probabilistic = false;   // computed modulo primes only
  bool exact = true;            // over Q, or two primes agree and all properties hold
  ResolutionSummary summary;
  GradedDims dims;
  Classification classification;
  std::vector<std::string> generators;  // minimal generators (first field of the run)
  std::optional<BourbakiData> bourbaki;
  std::optional<LatticeSummary> lattice;
  CurveChecks checks;
  std::vector<std::string> notes;
  std::optional<double> seconds;

  friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

struct PipelineOptions {
  FieldChoice field;
  AnalysisOptions analysis;
  bool timing = false;
};

/// Reducedness check, syzygy analysis, classification and checks.
/// Throws NotReduced, StructureError, ConsistencyError, BadPrime, DomainError.
CurveReport analyze_curve(const CurveInput& in, const PipelineOptions& opts);

nlohmann::json to_json(const CurveReport& r);
CurveReport report_from_json(const nlohmann::json& j);

/// Plain-text rendering for terminals.
std::string render_text(const CurveReport& r);

/// One row of the verification suite: expected values come from the closed
/// forms of each family, computed values from the analysis.
struct SuiteRow {
  std::string family;
  int param = 0;
  int d = 0;
  int r_expected = 0;
  int r_computed = 0;
  long tau_expected = 0;
  long tau_computed = 0;
  bool maximal_expected = false;
  bool maximal_computed = false;
  std::optional<bool> equivalence;
  std::optional<bool> thresholds;
  std::optional<bool> bourbaki;
  bool properties = false;
  std::string error;  // analysis error, if any

  bool pass() const;
};

/// Suites: all, thm2, s3, s4, exm4, ex12, sec44, generic, prop0.
std::vector<std::string> suite_names();

/// Family instances of a suite with curve degree in [dmin, dmax].
std::vector<std::pair<std::string, int>> suite_members(const std::string& suite, int dmin, int dmax);

/// Exponent r the family is built to have.
int expected_mdr(const std::string& family, int param);

SuiteRow run_suite_row(const std::string& family, int param, const PipelineOptions& opts);

/// All rows of a suite, analyzed in parallel and returned in member order.
std::vector<SuiteRow> run_suite(const std::vector<std::pair<std::string, int>>& members, const PipelineOptions& opts);

}  // namespace jacsyz
