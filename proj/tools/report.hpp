#ifndef CDECOMP_TOOLS_REPORT_HPP
#define CDECOMP_TOOLS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdecomp/cartesian.hpp"
#include "cdecomp/perm_group.hpp"

namespace cdecomp::tools
{

inline constexpr int report_schema = 1;

/// A group given on points, on the cell set of a decomposition, or both.
/// Generator-only groups too large for points carry cells alone.
struct AnalysisInput
{
  std::string name;
  std::optional<PermGroup> group;
  std::optional<CellGroup> cells;
  std::vector<CartesianDecomposition> decompositions;
};

struct AnalysisOptions
{
  bool search = false;
  SearchOptions search_options;
  /// Point degree above which primitivity is not decided.
  std::size_t max_primitivity_degree = 10'000;
  bool timings = true;
};

/// Throws Error for inputs outside the limits (LimitExceeded names it).
nlohmann::json analyze(AnalysisInput const &in, AnalysisOptions const &opts = {});

/// Rebuilds the input from the witness data of a report (generators and
/// partitions); throws Error(ParseError) on a malformed report.
AnalysisInput input_from_report(nlohmann::json const &report);

/// The report without timings, for comparing verdicts.
nlohmann::json verdicts(nlohmann::json report);

/// Human-readable summary of a report.
std::string format_report(nlohmann::json const &report);

} // namespace cdecomp::tools

#endif // CDECOMP_TOOLS_REPORT_HPP
