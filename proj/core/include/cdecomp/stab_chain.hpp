#ifndef CDECOMP_STAB_CHAIN_HPP
#define CDECOMP_STAB_CHAIN_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "cdecomp/perm.hpp"

namespace cdecomp
{

/// Base and strong generating set with explicit (inverse) transversals.
///
/// Level i stores base point b_i, the strong generators fixing b_0..b_{i-1},
/// the orbit of b_i under them and, for every orbit point p, the inverse of
/// the coset representative u_p mapping b_i to p. Construction is the
/// deterministic Schreier-Sims procedure: every Schreier generator of every
/// level is sifted, so the result is always a verified BSGS.
class StabChain
{
public:
  struct Level
  {
    Point base;
    std::vector<std::uint32_t> gens;           // indices into strong()
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;             // point -> orbit index or -1
    std::vector<Perm> inv_transversal;         // u_p^-1, parallel to orbit
    std::vector<std::uint32_t> done;           // Schreier pairs processed per orbit point
  };

  StabChain() = default;

  /// Builds a BSGS for <gens> whose base starts with `base_prefix`.
  /// Prefix points fixed by the whole group still get a level of orbit size 1.
  static StabChain build(std::size_t degree, std::span<Perm const> gens,
                         std::span<Point const> base_prefix = {});

  /// Adds generators to the group and re-completes the chain.
  void add_generators(std::span<Perm const> gens);

  std::size_t degree() const noexcept
  { return _degree; }

  std::size_t depth() const noexcept
  { return _levels.size(); }

  std::vector<Point> base() const;

  Level const &level(std::size_t i) const
  { return _levels[i]; }

  std::span<Perm const> strong() const noexcept
  { return _strong; }

  std::uint64_t order() const;

  bool contains(Perm const &x) const;

  /// Sifts x; returns the residue and the level where sifting stopped
  /// (depth() if x fixed every base point).
  std::pair<Perm, std::size_t> sift(Perm const &x, std::size_t from_level = 0) const;

  /// Strong generators of the i-th stabilizer G^(i) = G_{b_0..b_{i-1}}.
  std::vector<Perm> stabilizer_generators(std::size_t i) const;

  /// Coset representative u_p of level i mapping the base point to orbit[pos].
  Perm transversal(std::size_t i, std::size_t pos) const
  { return _levels[i].inv_transversal[pos].inverse(); }

  /// Uniformly random group element.
  Perm random_element(std::mt19937_64 &rng) const;

  /// All group elements; throws LimitExceeded beyond `limit`.
  std::vector<Perm> elements(std::uint64_t limit) const;

  /// Calls fn on every group element without materializing the list.
  void for_each_element(std::function<void(Perm const &)> const &fn) const;

private:
  void add_strong(Perm g, std::size_t first_level, std::size_t last_level);
  void extend_orbit(std::size_t level, std::size_t first_new_gen);
  void complete();

  std::size_t _degree = 0;
  std::vector<Perm> _strong;
  std::vector<Perm> _strong_inv;
  std::vector<Level> _levels;
};

} // namespace cdecomp

#endif // CDECOMP_STAB_CHAIN_HPP
