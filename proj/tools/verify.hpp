#ifndef CDECOMP_TOOLS_VERIFY_HPP
#define CDECOMP_TOOLS_VERIFY_HPP

#include <string>
#include <vector>

namespace cdecomp::tools
{

struct CriterionResult
{
  int id = 0;
  std::string scope;
  std::string title;
  bool ok = false;          // the property itself
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool pass() const noexcept
  { return ok && seconds < limit_seconds; }
};

/// Scope names accepted by run_verification, "all" included.
std::vector<std::string> const &verification_scopes();

/// Runs the acceptance criteria of one scope; throws std::invalid_argument
/// for an unknown scope. Exceptions inside a criterion are reported as
/// failures of that criterion.
std::vector<CriterionResult> run_verification(std::string const &scope);

/// One "PASS"/"FAIL" line per result with its time and limit, then a
/// summary line.
std::string format_results(std::vector<CriterionResult> const &results);

} // namespace cdecomp::tools

#endif // CDECOMP_TOOLS_VERIFY_HPP
