#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realtoric/formats.hpp"
#include "realtoric/small_cover.hpp"

namespace realtoric {

/// Computed vs. closed-form Betti numbers for a permutahedral cover.
struct ClosedFormCheck {
  std::vector<std::int64_t> expected;
  bool match = false;
  friend bool operator==(const ClosedFormCheck&, const ClosedFormCheck&) = default;
};

struct BreakdownEntry {
  Subset rows = 0;
  std::vector<int> support;
  ReducedBetti reduced;
  friend bool operator==(const BreakdownEntry&, const BreakdownEntry&) = default;
};

/// Everything the betti, permutahedron and graph-assoc commands print.
/// `seconds` appears in text output only so that JSON stays reproducible.
struct Report {
  std::string input;
  int n = 0;
  int m = 0;
  std::vector<std::int64_t> betti;
  std::vector<std::int64_t> mod2_betti;
  bool orientable = false;
  std::optional<Subset> witness;
  std::int64_t euler = 0;
  std::vector<std::string> warnings;
  std::optional<ClosedFormCheck> closed_form;
  std::optional<std::vector<BreakdownEntry>> breakdown;
  double seconds = 0;

  /// Equality ignores `seconds`.
  bool same_values(const Report& other) const;
};

struct ReportOptions {
  unsigned jobs = 1;
  bool breakdown = false;
  /// Set for permutahedron_cover(n) to add the A_2i C(n,2i) column.
  std::optional<int> hessenberg_n;
};

/// Runs the full pipeline. Throws InconsistencyError when the Euler
/// characteristics disagree or the breakdown does not sum to the totals.
Report make_report(const SmallCover& cover, std::string input, const ReportOptions& options);

Json report_to_json(const Report& report);
Report report_from_json(const Json& j);
std::string report_to_text(const Report& report);

struct ValidationReport {
  std::vector<std::string> labels;
  std::vector<FaceCheck> faces;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool valid() const { return errors.empty(); }
};

ValidationReport validation_report(const Problem& problem);
Json validation_to_json(const ValidationReport& report);
std::string validation_to_text(const ValidationReport& report);

Json covering_to_json(const CoveringCheck& check);
std::string covering_to_text(const CoveringCheck& check);

Json secant_to_json(const SecantTable& table);
std::string secant_to_text(const SecantTable& table);

}  // namespace realtoric
