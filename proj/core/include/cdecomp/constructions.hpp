#ifndef CDECOMP_CONSTRUCTIONS_HPP
#define CDECOMP_CONSTRUCTIONS_HPP

#include <map>
#include <memory>
#include <unordered_map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdecomp/cartesian.hpp"
#include "cdecomp/perm_group.hpp"

namespace cdecomp
{

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n on n points.
PermGroup dihedral_group(std::size_t n);
/// PSL(2,7) on the 8 points of the projective line over GF(7) (infinity = 7).
PermGroup psl2_7();
/// AGL(1,p) on p points.
PermGroup affine_line_group(std::size_t p);

/// Right and left regular actions on the elements; point i is elements[i]
/// and elements[0] is the identity. left acts by x -> s^-1 x, so the two
/// groups centralize each other.
struct RegularRepresentation
{
  PermGroup right;
  PermGroup left;
  std::vector<Perm> elements;
  std::shared_ptr<std::unordered_map<Perm, Point, PermHash> const> index;

  /// Point of an element of the original group.
  Point point_of(Perm const &x) const;
  /// Action on points of right multiplication by x.
  Perm right_mult(Perm const &x) const;
  /// Action on points of x -> a^-1 x a.
  Perm conjugation(Perm const &a) const;
};

RegularRepresentation regular_representation(PermGroup const &g, std::uint64_t limit = 100'000);

/// Intransitive direct product on the disjoint union of the point sets.
PermGroup direct_product(std::span<PermGroup const> groups);

enum class WreathAction
{
  Product,
  Imprimitive,
};

struct WreathSpec
{
  PermGroup base;
  PermGroup top;
  WreathAction action = WreathAction::Product;
};

struct WreathProduct
{
  PermGroup group;
  /// The base group L^l.
  PermGroup base;
  /// Coordinate-fiber decomposition (product action).
  std::optional<CartesianDecomposition> decomposition;
  /// The l blocks of size |Gamma| (imprimitive action).
  std::optional<Partition> blocks;
};

/// Product action on Gamma^l (mixed radix, coordinate 1 most significant)
/// or imprimitive action on l copies of Gamma (point i|Gamma| + gamma).
/// Throws InvalidSpec if l < 2 in product action.
WreathProduct wreath_product(WreathSpec const &spec);

/// Hol(M) on the points of a regular M: generated by M and every
/// automorphism, each found by a generator-image search checked against
/// the Cayley graph. Throws NotRegular or LimitExceeded (|M| > bound).
PermGroup holomorph(PermGroup const &m, std::size_t bound = 360);

/// {(h, ..., h)} acting coordinatewise on Gamma^l.
PermGroup diagonal_embed(PermGroup const &h, std::size_t l);

struct C3WrD8Example
{
  WreathProduct wreath;
  PermGroup h;
  PermGroup m1, m2, m3;
};

/// <(0 1 2)> wr D8 on 81 points, D8 = <(0 1),(2 3),(0 2)(1 3)>, with the
/// three minimal normal subgroups {(x,x,x,x)}, {(x,x,x^2,x^2)} and
/// {(x,x^2,y,y^2)}.
C3WrD8Example example_c3_wr_d8();

struct DiagonalQuotientExample
{
  PermGroup group;
  CartesianDecomposition decomposition;
  /// On Gamma = T^k: the right and left regular copies of T^k and H = M1 x N1.
  PermGroup m1, n1, h;
  /// On the full point set: M1^l and the diagonal copy of N1.
  PermGroup m1_power, n1_diagonal;
};

/// G = M1^l (H delta x S_l) on |T|^(kl) points. Throws LimitExceeded above
/// max_degree.
DiagonalQuotientExample example_diagonal_quotient(PermGroup const &t, std::size_t k, std::size_t l,
                                                  std::size_t max_degree = 10'000);

/// (T x T) : <inversion> on the points of T with diagonal point stabilizer.
PermGroup simple_diagonal_group(PermGroup const &t);

struct TwistedWreathSpec
{
  /// Non-abelian simple group, regular on |T| points.
  PermGroup t;
  PermGroup p;
  PermGroup q;
  /// phi: one automorphism of T (as a permutation of T's points) for each
  /// generator of q, in the order of q.generators().
  std::vector<Perm> phi;
};

struct TwistedWreath
{
  CartesianDecomposition decomposition;
  /// W on the cell set (faithful), and its socle T^k there.
  CellGroup cells;
  PermGroup socle;
  /// Generators of W on T^k (no stabilizer chain is built at that degree).
  std::vector<Perm> point_generators;
  std::size_t coset_count = 0;
};

/// T wr_phi P acting on T^|P:Q|; coset representatives are the
/// lexicographically least element of each right coset. Throws InvalidSpec
/// per violated hypothesis (T not regular, not non-abelian simple, Q not a
/// core-free subgroup, phi not a homomorphism into Inn T, its image trivial
/// or all of Inn T).
TwistedWreath twisted_wreath(TwistedWreathSpec const &spec);

/// The automorphism x -> a^-1 x a of a regular T, as a permutation of T's
/// points (a given as an element of T).
Perm inner_automorphism(PermGroup const &regular_t, Perm const &a);

/// The twisted wreath example: T = A5, P = S3, Q = <(0 1)>, phi = conjugation
/// by an involution.
TwistedWreathSpec example_twisted_spec();

/// A named group or example, for the CLI and the test corpus.
struct Constructed
{
  std::string name;
  PermGroup group;
  std::optional<CartesianDecomposition> decomposition;
  std::optional<CellGroup> cells;
};

/// Group names: S<n>, A<n>, C<n>, D<2n> (dihedral of order 2n), AGL1_<p>,
/// PSL27, V4, SD_A5 (simple diagonal on 60), REG_<name> (right regular).
PermGroup named_group(std::string const &name);

/// `kind` is one of wreath, holomorph, example, twisted, group; params are
/// key=value pairs (wreath: base, top, action; holomorph: group; example:
/// name = c3d8 | diagq; twisted: none; group: name). Throws InvalidSpec.
Constructed construct(std::string const &kind, std::map<std::string, std::string> const &params);

} // namespace cdecomp

#endif // CDECOMP_CONSTRUCTIONS_HPP
