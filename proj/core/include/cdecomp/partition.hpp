#ifndef CDECOMP_PARTITION_HPP
#define CDECOMP_PARTITION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cdecomp/perm.hpp"

namespace cdecomp
{

/// Disjoint non-empty cells covering {0, ..., n-1}. Stored canonically:
/// points sorted within cells, cells sorted by minimum point.
class Partition
{
public:
  Partition() = default;

  /// Throws InvalidPoint / InvalidSpec if the cells do not partition
  /// {0..degree-1}.
  Partition(std::size_t degree, std::vector<std::vector<Point>> cells);

  /// Partition from a cell label per point (labels arbitrary).
  static Partition from_labels(std::vector<std::size_t> const &labels);

  std::size_t degree() const noexcept
  { return _cell_of.size(); }

  std::size_t size() const noexcept
  { return _cells.size(); }

  std::vector<std::vector<Point>> const &cells() const noexcept
  { return _cells; }

  std::vector<Point> const &cell(std::size_t i) const
  { return _cells[i]; }

  /// Index of the cell containing x.
  std::size_t cell_of(Point x) const
  { return _cell_of[x]; }

  /// More than one cell and at least one cell with two or more points.
  bool is_proper() const noexcept;

  /// Image partition under a permutation.
  Partition image(Perm const &g) const;

  /// Permutation of the cell indices induced by g (g must preserve the partition).
  Perm cell_action(Perm const &g) const;

  /// True iff g maps every cell onto a cell.
  bool preserved_by(Perm const &g) const;

  std::string to_string() const;

  friend bool operator==(Partition const &a, Partition const &b)
  { return a._cells == b._cells; }

  friend auto operator<=>(Partition const &a, Partition const &b)
  { return a._cells <=> b._cells; }

private:
  std::vector<std::vector<Point>> _cells;
  std::vector<std::size_t> _cell_of;
};

} // namespace cdecomp

#endif // CDECOMP_PARTITION_HPP
