#ifndef CDECOMP_STRUCTURE_HPP
#define CDECOMP_STRUCTURE_HPP

#include <span>
#include <vector>

#include "cdecomp/perm_group.hpp"

namespace cdecomp
{

struct NormalSubgroupRecord
{
  PermGroup subgroup;
  bool is_minimal = true;
  bool is_transitive = false;
  bool is_abelian = false;
};

/// Subgroups of a common parent forming an internal direct product.
struct DirectFactorization
{
  std::vector<PermGroup> factors;
};

/// Smallest subgroup containing `seeds` normalized by every generator of g.
PermGroup normal_closure(PermGroup const &g, std::span<Perm const> seeds);

/// Commutator subgroup [h, h].
PermGroup derived_subgroup(PermGroup const &h);

/// Whether every g-generator conjugate of every h-generator lies in h.
bool normalizes(PermGroup const &g, PermGroup const &h);

/// As normalizes(), after checking h <= g (throws NotSubgroup otherwise).
bool is_normal(PermGroup const &g, PermGroup const &h);

/// All minimal normal subgroups, sorted by (order, generators). Throws
/// TrivialGroup on the trivial group and LimitExceeded when a large abelian
/// normal subgroup blocks the structural search.
std::vector<NormalSubgroupRecord> minimal_normal_subgroups(PermGroup const &g);

/// Product of all minimal normal subgroups.
PermGroup socle(PermGroup const &g);

/// No proper non-trivial normal subgroup.
bool is_simple(PermGroup const &h);

/// {x in g : x commutes with every generator of m}.
PermGroup centralizer_in(PermGroup const &g, PermGroup const &m);

/// Centralizer in Sym(Omega) of a transitive group: semiregular, one
/// element for each fixed point of a point stabilizer.
PermGroup centralizer_in_sym_of_transitive(PermGroup const &m);

/// The opposite regular representation of a regular group.
PermGroup centralizer_in_sym_of_regular(PermGroup const &m);

/// Finest direct factorization of a non-abelian characteristically simple
/// group. Throws AbelianFactorization on abelian input and Precondition if
/// a minimal normal factor is not simple.
DirectFactorization simple_direct_factors(PermGroup const &m);

/// i-th coordinate of x in the internal direct product; throws NotInProduct.
Perm project_to_factor(Perm const &x, DirectFactorization const &fact, std::size_t i);

/// Image of h under the i-th coordinate projection.
PermGroup project_to_factor(PermGroup const &h, DirectFactorization const &fact, std::size_t i);

/// Every coordinate projection of h is onto.
bool is_subdirect(PermGroup const &h, DirectFactorization const &fact);

/// Intersection of two subgroups of a common symmetric group.
PermGroup intersection(PermGroup const &a, PermGroup const &b);

} // namespace cdecomp

#endif // CDECOMP_STRUCTURE_HPP
