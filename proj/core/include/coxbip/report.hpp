#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxbip/census.hpp"
#include "coxbip/coxeter_matrix.hpp"
#include "coxbip/criteria.hpp"
#include "coxbip/spherical.hpp"

namespace coxbip {

inline constexpr const char* kSchemaVersion = "1.0.0";
inline constexpr const char* kToolVersion = "0.3.0";
/// Fixed; recorded so downstream randomised probes can be replayed.
inline constexpr std::uint64_t kReportSeed = 20240611;

struct SphericalFactor {
  GeneratorSet members;
  TypeLabel type;
  friend bool operator==(const SphericalFactor&, const SphericalFactor&) = default;
};

struct DiagramSummary {
  std::vector<GeneratorSet> irreducible_components;
  std::vector<GeneratorSet> odd_components;
  std::vector<SphericalFactor> spherical_factors;
  bool two_spherical = false;
  bool irreducible = false;
  bool spherical = false;
  friend bool operator==(const DiagramSummary&, const DiagramSummary&) = default;
};

struct CensusEntry {
  std::string generator;
  CensusReport report;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct AnalysisReport {
  std::string schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::uint64_t seed = kReportSeed;
  std::string source;
  CoxeterMatrix input{1, 2, {}};
  DiagramSummary diagram;
  Verdict verdict;
  std::vector<CensusEntry> census;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

DiagramSummary summarize_diagram(const CoxeterMatrix& m);

/// Diagram summary plus verdict; census left empty.
AnalysisReport analyze(const CoxeterMatrix& m, std::string source, bool all_witnesses = false,
                       std::size_t cap = kDefaultEnumerationCap);

std::string report_to_json(const AnalysisReport& r, int indent = 2);
/// Inverse of report_to_json. Throws ParseError on schema violations.
AnalysisReport report_from_json(const std::string& text);

std::string census_to_json(const CensusReport& c, int indent = 2);
CensusReport census_from_json(const std::string& text);

/// Graphviz rendering: one node per generator, an edge per finite label, labels
/// other than 2 printed, odd labels drawn bold. Pairs with m = ∞ are omitted.
std::string diagram_to_dot(const CoxeterMatrix& m, const std::string& graph_name = "coxeter");

}  // namespace coxbip
