#ifndef CDECOMP_PERM_HPP
#define CDECOMP_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdecomp
{

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as an image table. Permutations act
/// on the right: `p.image(w)` is written w^p, and `a * b` applies a first.
class Perm
{
public:
  Perm() = default;

  explicit Perm(std::size_t degree);

  /// Throws ErrorCode::InvalidPermutation if `images` is not a bijection.
  explicit Perm(std::vector<Point> images);

  Perm(std::initializer_list<Point> images)
  : Perm(std::vector<Point>(images))
  {}

  /// Builds a permutation of the given degree from disjoint cycles.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const noexcept
  { return _images.size(); }

  Point operator[](Point x) const noexcept
  { return _images[x]; }

  Point image(Point x) const noexcept
  { return _images[x]; }

  std::span<Point const> images() const noexcept
  { return _images; }

  bool is_identity() const noexcept;

  Perm inverse() const;

  /// Element order (lcm of cycle lengths).
  std::uint64_t order() const;

  Perm pow(std::int64_t e) const;

  /// Number of points moved.
  std::size_t support_size() const noexcept;

  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const noexcept;

  std::vector<std::vector<Point>> cycles() const;

  /// Disjoint-cycle notation over 0-based points; identity is "()".
  std::string to_cycle_string() const;

  /// Conjugate g^-1 * this * g.
  Perm conjugate(Perm const &g) const;

  friend Perm operator*(Perm const &a, Perm const &b);

  Perm &operator*=(Perm const &b);

  friend bool operator==(Perm const &, Perm const &) = default;

  friend auto operator<=>(Perm const &a, Perm const &b)
  { return a._images <=> b._images; }

private:
  std::vector<Point> _images;
};

/// Right-action product: x^(a*b) = (x^a)^b. Throws on degree mismatch.
Perm compose(Perm const &a, Perm const &b);

Perm commutator(Perm const &a, Perm const &b);

/// Parses disjoint-cycle notation such as "(0 1 2)(3 4)" or "()".
/// Whitespace and commas between points are ignored.
Perm parse_cycles(std::string_view text, std::size_t degree);

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

} // namespace cdecomp

#endif // CDECOMP_PERM_HPP
