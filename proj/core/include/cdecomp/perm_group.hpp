#ifndef CDECOMP_PERM_GROUP_HPP
#define CDECOMP_PERM_GROUP_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cdecomp/partition.hpp"
#include "cdecomp/perm.hpp"
#include "cdecomp/stab_chain.hpp"

namespace cdecomp
{

/// Seed shared by all randomized internals; every algorithm derives its own
/// generator from it, so results are reproducible for a given seed.
void set_random_seed(std::uint64_t seed);
std::uint64_t random_seed();
std::mt19937_64 make_rng(std::uint64_t salt);

/// Element-count limit for algorithms that enumerate group elements.
inline constexpr std::uint64_t enumeration_limit = 1'000'000;

/// A permutation group given by generators. The stabilizer chain is built
/// lazily on first use and cached; call prepare() before sharing a group
/// between threads.
class PermGroup
{
public:
  PermGroup() = default;

  explicit PermGroup(std::size_t degree, std::vector<Perm> generators = {});

  /// Adopts an existing chain (its strong generators become the generators).
  PermGroup(std::size_t degree, std::vector<Perm> generators, StabChain chain);

  static PermGroup trivial(std::size_t degree)
  { return PermGroup(degree); }

  std::size_t degree() const noexcept
  { return _degree; }

  std::span<Perm const> generators() const noexcept
  { return _gens; }

  StabChain const &chain() const;

  /// A fresh chain whose base begins with `prefix`.
  StabChain chain_with_base(std::span<Point const> prefix) const;

  void prepare() const
  { (void)chain(); }

  std::uint64_t order() const
  { return chain().order(); }

  bool is_trivial() const;

  /// Throws DegreeMismatch if x has another degree.
  bool contains(Perm const &x) const;

  bool contains(PermGroup const &h) const;

  Perm random_element(std::mt19937_64 &rng) const
  { return chain().random_element(rng); }

  std::vector<Perm> elements(std::uint64_t limit = enumeration_limit) const
  { return chain().elements(limit); }

  void for_each_element(std::function<void(Perm const &)> const &fn) const
  { chain().for_each_element(fn); }

  /// <this, extra>, reusing the cached chain.
  PermGroup with_generators(std::span<Perm const> extra) const;

  Perm identity() const
  { return Perm(_degree); }

private:
  std::size_t _degree = 0;
  std::vector<Perm> _gens;
  mutable std::shared_ptr<StabChain const> _chain;
};

/// Same degree, same order and mutual containment of generators.
bool same_group(PermGroup const &a, PermGroup const &b);

std::vector<Point> orbit(PermGroup const &g, Point p);

/// Orbits sorted by minimum point.
std::vector<std::vector<Point>> orbits(PermGroup const &g);

/// Orbit of a point under an arbitrary generator list.
std::vector<Point> orbit_of(std::span<Perm const> gens, std::size_t degree, Point p);

PermGroup point_stabilizer(PermGroup const &g, Point p);

/// Stabilizer of the given points, one after another.
PermGroup pointwise_stabilizer(PermGroup const &g, std::span<Point const> points);

/// Element filtering below 10^5 elements, base-image backtracking above.
PermGroup setwise_stabilizer(PermGroup const &g, std::span<Point const> set);

bool is_transitive(PermGroup const &g);
bool is_regular(PermGroup const &g);
bool is_semiregular(PermGroup const &g);

/// Commutes elementwise (checked on generators).
bool is_abelian(PermGroup const &g);

/// Minimal block (as a partition) containing the given seed points.
Partition minimal_block_system(PermGroup const &g, std::span<Point const> seed);

/// All minimal non-trivial block systems of a transitive group.
std::vector<Partition> minimal_block_systems(PermGroup const &g);

/// Every non-trivial block system of a transitive group.
std::vector<Partition> all_block_systems(PermGroup const &g);

/// Depth-first search over the stabilizer chain (base beginning with
/// `base_prefix`). `accept_image(level, base_point, image)` prunes partial
/// base images; `accept` tests complete elements. Returns the subgroup of
/// all accepted elements; the property must define a subgroup.
PermGroup backtrack_subgroup(PermGroup const &g, std::span<Point const> base_prefix,
                             std::function<bool(std::size_t, std::span<Point const>,
                                                std::span<Point const>)> const &accept_image,
                             std::function<bool(Perm const &)> const &accept);

/// Subgroup of g whose action (given by one image permutation per generator
/// of g, on a set of size `action_degree`) fixes every point of `fixed`.
/// With `fixed` covering the whole set this is the kernel of the action.
PermGroup action_stabilizer(PermGroup const &g, std::span<Perm const> action_images,
                            std::size_t action_degree, std::span<Point const> fixed);

/// Group generated by the images of g's generators under an action.
PermGroup action_image(std::span<Perm const> action_images, std::size_t action_degree);

/// Generator file: "degree n", then one permutation per line in cycle
/// notation, "()" for the identity. Parse errors carry line numbers.
PermGroup parse_generators(std::istream &in);

/// Parses a "degree n" header line; line_no is used in error messages.
std::size_t parse_degree_line(std::string const &line, std::size_t line_no);
std::string format_generators(PermGroup const &g);

} // namespace cdecomp

#endif // CDECOMP_PERM_GROUP_HPP
