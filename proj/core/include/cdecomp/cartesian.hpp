#ifndef CDECOMP_CARTESIAN_HPP
#define CDECOMP_CARTESIAN_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "cdecomp/partition.hpp"
#include "cdecomp/perm_group.hpp"

namespace cdecomp
{

/// A set of proper partitions in which every choice of one cell per
/// partition meets in exactly one point. Partitions are kept sorted, so
/// equality does not depend on input order. Build with validate().
class CartesianDecomposition
{
public:
  CartesianDecomposition() = default;

  std::size_t degree() const noexcept
  { return _parts.empty() ? 0 : _parts.front().degree(); }

  std::size_t index() const noexcept
  { return _parts.size(); }

  bool homogeneous() const noexcept;

  std::vector<Partition> const &partitions() const noexcept
  { return _parts; }

  Partition const &partition(std::size_t i) const
  { return _parts[i]; }

  /// Index of a partition equal to p, or index() if none.
  std::size_t find(Partition const &p) const;

  /// Total number of cells over all partitions.
  std::size_t cell_degree() const noexcept
  { return _offsets.back(); }

  /// Cells of partition i occupy [offset(i), offset(i+1)) in the cell set.
  std::size_t offset(std::size_t i) const
  { return _offsets[i]; }

  /// Partition containing a cell of the cell set.
  std::size_t partition_of_cell(std::size_t c) const
  { return _part_of_cell[c]; }

  /// The unique point in the intersection of the chosen cells
  /// (cells[i] indexes a cell of partition i).
  Point point_of(std::span<std::size_t const> cells) const;

  friend bool operator==(CartesianDecomposition const &a, CartesianDecomposition const &b)
  { return a._parts == b._parts; }

  friend auto operator<=>(CartesianDecomposition const &a, CartesianDecomposition const &b)
  { return a._parts <=> b._parts; }

private:
  friend CartesianDecomposition validate(std::vector<Partition> parts);

  std::vector<Partition> _parts;
  std::vector<std::size_t> _offsets;
  std::vector<std::size_t> _part_of_cell;
  std::vector<Point> _point_of;   // mixed-radix cell code -> point
};

/// Throws InvalidSpec (fewer than two partitions, mixed degrees), NotProper
/// or BadIntersection (naming a violating cell tuple).
CartesianDecomposition validate(std::vector<Partition> parts);

/// Each generator maps each partition onto a partition of e.
bool is_invariant(PermGroup const &g, CartesianDecomposition const &e);

/// Single orbit on the partitions; throws NotInvariant.
bool is_transitive_on(PermGroup const &g, CartesianDecomposition const &e);

/// Permutation of the partition indices induced by an e-preserving x.
Perm partition_action(CartesianDecomposition const &e, Perm const &x);

/// Faithful image of an e-preserving permutation on the cell set.
Perm to_cells(CartesianDecomposition const &e, Perm const &x);

/// Inverse of to_cells; c must map partition cell ranges onto cell ranges.
Perm from_cells(CartesianDecomposition const &e, Perm const &c);

/// Cell indices (one per partition) of the cells containing a point.
std::vector<std::size_t> cells_of_point(CartesianDecomposition const &e, Point p);

/// An e-preserving group acting faithfully on the cell set of e. All
/// subgroup computations for (G, e) run here; point-level facts are read
/// off cell tuples.
class CellGroup
{
public:
  CellGroup(PermGroup const &g, CartesianDecomposition e);

  /// Adopts a group already given on the cell set.
  CellGroup(CartesianDecomposition e, PermGroup cells);

  CartesianDecomposition const &decomposition() const noexcept
  { return _e; }

  PermGroup const &group() const noexcept
  { return _cells; }

  /// Action on the partition indices.
  PermGroup partition_action_group() const;

  /// Generators of the stabilizer of partition i (Schreier generators of
  /// the action on partitions; no chain on the cell set is needed).
  std::vector<Perm> partition_stabilizer_generators(std::size_t i) const;

  /// Restriction of a cell permutation fixing partition i to its cells.
  Perm restrict(Perm const &c, std::size_t i) const;

  /// Cell permutation acting as x on partition i and trivially elsewhere.
  Perm extend(Perm const &x, std::size_t i) const;

  /// Orbit of a point of the underlying set under a subgroup given by cell
  /// generators, as sorted points.
  std::vector<Point> point_orbit(std::span<Perm const> cell_gens, Point p) const;

  bool transitive_on_points(PermGroup const &h) const;

  /// Stabilizer in h of a point of the underlying set.
  PermGroup point_stabilizer(PermGroup const &h, Point p) const;

  /// Kernel of h on the cells of the listed partitions.
  PermGroup kernel_on(PermGroup const &h, std::span<std::size_t const> parts) const;

  /// Lift of a cell-set subgroup to the underlying set.
  PermGroup lift(PermGroup const &h) const;

private:
  CartesianDecomposition _e;
  PermGroup _cells;
};

/// The group induced on the cells of partition i by its stabilizer.
PermGroup component(PermGroup const &g, CartesianDecomposition const &e, std::size_t i);
PermGroup component(CellGroup const &g, std::size_t i);

/// Element (x_1, ..., x_l) sigma of L wr S_l in product action on Gamma^l,
/// points coded mixed-radix with coordinate 1 most significant; sigma moves
/// the entry at position i to position i sigma.
Perm product_action_perm(std::span<Perm const> base, Perm const &top, std::size_t m);

/// Decode / encode a point of Gamma^l with cell count m.
std::vector<std::size_t> decode_tuple(Point p, std::size_t m, std::size_t l);
Point encode_tuple(std::span<std::size_t const> t, std::size_t m);

struct WreathEmbedding
{
  /// theta: point -> one cell index per partition.
  std::vector<std::vector<std::size_t>> theta;
  /// cell_maps[i] maps partition i onto partition 0 (cell_maps[0] = 1).
  std::vector<Perm> cell_maps;
  /// alpha[i][c]: cell c of partition i -> cell of partition 0.
  std::vector<std::vector<std::size_t>> alpha;
  /// theta': point -> code of a tuple of partition-0 cells.
  std::vector<Point> theta_prime;
  /// Images of the generators on Gamma^l.
  std::vector<Perm> chi_images;
  /// Base entries (on partition-0 cells) and top parts of chi_images.
  std::vector<std::vector<Perm>> chi_base;
  std::vector<Perm> chi_top;
  std::size_t cell_count = 0;
};

/// Throws NotHomogeneous, NotInvariant or NotTransitive (on partitions).
WreathEmbedding embed(PermGroup const &g, CartesianDecomposition const &e);

struct SearchOptions
{
  std::size_t max_index = 4;
  std::size_t max_degree = 10'000;
  std::uint64_t max_homomorphisms = 100'000;
};

/// G-invariant decompositions of index <= max_index, found from the block
/// systems of subgroups of index <= max_index that act transitively on
/// points. Every result passes validate and is_invariant. Decompositions
/// whose partition stabilizers are intransitive on points are not found.
/// Throws NotTransitive or SearchTooLarge.
std::vector<CartesianDecomposition> search_invariant_decompositions(PermGroup const &g,
                                                                    SearchOptions const &opts = {});

/// Decomposition file: "degree n", then one partition per line as
/// "{0 1 2}{3 4 5}". Parse errors carry line numbers.
CartesianDecomposition parse_decomposition(std::istream &in);
std::string format_decomposition(CartesianDecomposition const &e);

} // namespace cdecomp

#endif // CDECOMP_CARTESIAN_HPP
