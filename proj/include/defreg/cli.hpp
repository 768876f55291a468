#pragma once

#include "defreg/binomial_edge.hpp"
#include "defreg/bounds.hpp"
#include "defreg/exact_field.hpp"
#include "defreg/monomial.hpp"
#include "defreg/posets.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace defreg::cli {

inline constexpr int kFormatVersion = 1;

enum class Mode { Monomial, Graph, Poset };
enum class OutputFormat { Text, Json };

struct InputSource {
  enum class Kind { Inline, File };
  Kind kind = Kind::Inline;
  std::string value;  // the text itself, or a path
};

struct RunConfig {
  Mode mode = Mode::Monomial;
  // Monomial mode: comma-separated variable names and generators.
  std::string vars;
  std::string gens;
  // Graph and poset modes: edge list or poset document.
  InputSource input;
  FieldSpec field = FieldSpec::rationals();
  OutputFormat format = OutputFormat::Text;
  bool filtration = false;
  bool witnesses = false;
  bool check = false;
  bool hasse = false;
  bool strict = false;
  std::size_t max_poset = kDefaultPosetBudget;
  std::size_t max_faces = kDefaultFaceBudget;
  std::optional<std::size_t> only_j;
};

enum ExitCode : int { kOk = 0, kParseError = 1, kBudgetExceeded = 2, kConditionFailure = 3 };

struct RunResult {
  int exit_code = kOk;
  std::string output;  // report, for stdout
  std::string error;   // diagnostic, for stderr
};

RunResult run(const RunConfig& config);

// "rational" or "gf:<p>".
FieldSpec parse_field(std::string_view text);

// Comma-separated variable names.
RingContext parse_vars(std::string_view text);

// Comma-separated generators, each a '*'-separated product of distinct
// variables ("x*z, x*w"). Throws NonSquarefree, UnknownVariable, ZeroIdeal.
SquarefreeIdeal parse_monomial(const RingContext& ring, std::string_view gens);

// Edge list: optional "format: 1" line, then "n <count>", then one "u v"
// per line with 1 <= u < v <= n. '#' starts a comment.
Graph parse_graph(std::string_view text);

// JSON poset document:
//   {"format": 1, "nvars": 6,
//    "elements": [{"id": "p1", "dim": 3, "height": 3, "cm": true}, ...],
//    "relations": [["p4", "p1"], ...]}
// A relation [a, b] states ideal(a) contains ideal(b), i.e. a <= b. The
// order is the reflexive-transitive closure of the relations. "nvars",
// "height" and "cm" (default true) are optional.
AnalysisPoset parse_poset_doc(std::string_view text);

struct ReportToggles {
  bool filtration = false;
  bool witnesses = false;
  bool check = false;
  bool hasse = false;
};

nlohmann::ordered_json report_to_json(const AnalysisPoset& poset, const BoundReport& report,
                                      const ReportToggles& toggles = {});
std::string report_to_text(const AnalysisPoset& poset, const BoundReport& report,
                           const ReportToggles& toggles = {});

// The parts of a report that must survive serialization.
struct ReportDigest {
  std::map<std::size_t, std::vector<std::string>> s_sets;
  std::map<std::size_t, ExtendedInt> bounds;
  std::map<std::pair<std::string, int>, std::size_t> multiplicities;

  bool operator==(const ReportDigest&) const = default;
};

ReportDigest digest(const AnalysisPoset& poset, const BoundReport& report);
ReportDigest parse_report_json(std::string_view text);

} // namespace defreg::cli
