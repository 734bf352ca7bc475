#ifndef CDECOMP_QUASI_TYPES_HPP
#define CDECOMP_QUASI_TYPES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdecomp/cartesian.hpp"
#include "cdecomp/perm_group.hpp"
#include "cdecomp/structure.hpp"

namespace cdecomp
{

enum class QPTag
{
  HA,
  HS,
  HC,
  Sd,
  Cd,
  Pa,
  As,
  Tw,
};

/// "HA", "HS", "HC", "Sd", "Cd", "Pa", "As", "Tw".
std::string_view to_string(QPTag tag);
/// Primitive variant names: "HA", "HS", "HC", "SD", "CD", "PA", "AS", "TW".
std::string_view primitive_name(QPTag tag);

struct QPType
{
  QPTag tag = QPTag::HA;
  /// Same tag, present iff the group is known to be primitive.
  std::optional<QPTag> primitive_variant;
};

struct TransitivityProfile
{
  /// is_transitive refers to the underlying point set.
  std::vector<NormalSubgroupRecord> minimal_normals;
  std::size_t transitive_count = 0;
  bool quasiprimitive = false;
  bool innately_transitive = false;
};

/// Throws NotTransitive on intransitive input, TrivialGroup on the trivial group.
TransitivityProfile profile(PermGroup const &g);
/// Subgroups are on the cell set; transitivity is on points.
TransitivityProfile profile(CellGroup const &g);

/// Throws NotQuasiprimitive.
QPType qp_type(PermGroup const &g);
/// At cell scale, primitivity is decided on points only up to
/// max_primitivity_degree; above it primitive_variant is left empty unless
/// the type forces primitivity.
QPType qp_type(CellGroup const &g, std::size_t max_primitivity_degree = 10'000);

/// No non-trivial block system; throws NotTransitive.
bool is_primitive(PermGroup const &g);

struct DiagonalQuotientEvidence
{
  /// The non-abelian, non-simple, regular minimal normal subgroup.
  PermGroup m1;
  /// C_G(M1) and C_Sym(M1), both on points.
  PermGroup centralizer;
  PermGroup sym_centralizer;
  /// M1 has k simple factors and C_G(M1) is T^(k/m).
  std::size_t k = 0;
  std::size_t m = 0;
};

struct DiagonalQuotientCheck
{
  std::optional<DiagonalQuotientEvidence> evidence;
  std::string reason;
};

DiagonalQuotientCheck diagonal_quotient_check(PermGroup const &g);
DiagonalQuotientCheck diagonal_quotient_check(CellGroup const &g);

} // namespace cdecomp

#endif // CDECOMP_QUASI_TYPES_HPP
