#include "cdecomp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cdecomp/error.hpp"

namespace cdecomp
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
  case ErrorCode::InvalidPoint: return "INVALID_POINT";
  case ErrorCode::InvalidPermutation: return "INVALID_PERMUTATION";
  case ErrorCode::ParseError: return "PARSE_ERROR";
  case ErrorCode::NotTransitive: return "NOT_TRANSITIVE";
  case ErrorCode::NotRegular: return "NOT_REGULAR";
  case ErrorCode::NotQuasiprimitive: return "NOT_QUASIPRIMITIVE";
  case ErrorCode::NotSubgroup: return "NOT_SUBGROUP";
  case ErrorCode::NotInProduct: return "NOT_IN_PRODUCT";
  case ErrorCode::NotProper: return "NOT_PROPER";
  case ErrorCode::BadIntersection: return "BAD_INTERSECTION";
  case ErrorCode::NotInvariant: return "NOT_INVARIANT";
  case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
  case ErrorCode::AbelianFactorization: return "ABELIAN_FACTORIZATION";
  case ErrorCode::SearchTooLarge: return "SEARCH_TOO_LARGE";
  case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
  case ErrorCode::Precondition: return "PRECONDITION";
  case ErrorCode::TrivialGroup: return "TRIVIAL_GROUP";
  case ErrorCode::InvalidSpec: return "INVALID_SPEC";
  }
  return "UNKNOWN";
}

Perm::Perm(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Perm::Perm(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw Error(ErrorCode::InvalidPermutation, "image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw Error(ErrorCode::InvalidPoint,
                    "point " + std::to_string(x) + " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw Error(ErrorCode::InvalidPermutation,
                    "point " + std::to_string(x) + " repeated in cycles");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  Perm p;
  p._images = std::move(images);
  return p;
}

bool Perm::is_identity() const noexcept
{
  for (Point x = 0; x < _images.size(); ++x) {
    if (_images[x] != x)
      return false;
  }
  return true;
}

Perm Perm::inverse() const
{
  Perm res;
  res._images.resize(_images.size());
  for (Point x = 0; x < _images.size(); ++x)
    res._images[_images[x]] = x;
  return res;
}

std::uint64_t Perm::order() const
{
  std::uint64_t result = 1;
  std::vector<bool> seen(_images.size(), false);
  for (Point x = 0; x < _images.size(); ++x) {
    if (seen[x])
      continue;
    std::uint64_t len = 0;
    for (Point y = x; !seen[y]; y = _images[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::pow(std::int64_t e) const
{
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm result(degree());
  while (k) {
    if (k & 1u)
      result *= base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

std::size_t Perm::support_size() const noexcept
{
  std::size_t count = 0;
  for (Point x = 0; x < _images.size(); ++x)
    count += _images[x] != x;
  return count;
}

Point Perm::first_moved() const noexcept
{
  for (Point x = 0; x < _images.size(); ++x) {
    if (_images[x] != x)
      return x;
  }
  return static_cast<Point>(_images.size());
}

std::vector<std::vector<Point>> Perm::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(_images.size(), false);
  for (Point x = 0; x < _images.size(); ++x) {
    if (seen[x] || _images[x] == x)
      continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = _images[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    res.push_back(std::move(cycle));
  }
  return res;
}

std::string Perm::to_cycle_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &cycle : cs) {
    ss << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      ss << (i ? " " : "") << cycle[i];
    ss << ')';
  }
  return ss.str();
}

Perm Perm::conjugate(Perm const &g) const
{
  // x^(g^-1 p g): image of x^g... is (x p)^g placed at x^g.
  Perm res;
  res._images.resize(_images.size());
  for (Point x = 0; x < _images.size(); ++x)
    res._images[g._images[x]] = g._images[_images[x]];
  return res;
}

Perm operator*(Perm const &a, Perm const &b)
{
  Perm res;
  res._images.resize(a._images.size());
  for (std::size_t x = 0; x < a._images.size(); ++x)
    res._images[x] = b._images[a._images[x]];
  return res;
}

Perm &Perm::operator*=(Perm const &b)
{
  for (auto &x : _images)
    x = b._images[x];
  return *this;
}

Perm compose(Perm const &a, Perm const &b)
{
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch,
                "cannot compose permutations of degree " + std::to_string(a.degree()) +
                " and " + std::to_string(b.degree()));
  return a * b;
}

Perm commutator(Perm const &a, Perm const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

Perm parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_ws();
  if (i == text.size())
    throw Error(ErrorCode::ParseError, "empty permutation");

  while (i < text.size()) {
    if (text[i] != '(')
      throw Error(ErrorCode::ParseError,
                  std::string("expected '(' at column ") + std::to_string(i + 1));
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw Error(ErrorCode::ParseError, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorCode::ParseError,
                    std::string("unexpected character '") + text[i] + "' at column " +
                    std::to_string(i + 1));
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xffffffffull)
          throw Error(ErrorCode::ParseError, "point out of range");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Perm::from_cycles(degree, cycles);
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace cdecomp
