#ifndef CDECOMP_ERROR_HPP
#define CDECOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdecomp
{

enum class ErrorCode
{
  DegreeMismatch,
  InvalidPoint,
  InvalidPermutation,
  ParseError,
  NotTransitive,
  NotRegular,
  NotQuasiprimitive,
  NotSubgroup,
  NotInProduct,
  NotProper,
  BadIntersection,
  NotInvariant,
  NotHomogeneous,
  AbelianFactorization,
  SearchTooLarge,
  LimitExceeded,
  Precondition,
  TrivialGroup,
  InvalidSpec,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a stable error code; the message names the offending
/// input (line number, cell tuple, exceeded bound, ...).
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
  {}

  ErrorCode code() const noexcept
  { return _code; }

private:
  ErrorCode _code;
};

} // namespace cdecomp

#endif // CDECOMP_ERROR_HPP
