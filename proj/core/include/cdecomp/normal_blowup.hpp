#ifndef CDECOMP_NORMAL_BLOWUP_HPP
#define CDECOMP_NORMAL_BLOWUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "cdecomp/cartesian.hpp"
#include "cdecomp/perm_group.hpp"
#include "cdecomp/quasi_types.hpp"

namespace cdecomp
{

/// All groups live on the cell set of the decomposition.
struct NormalityCertificate
{
  PermGroup witness;
  /// factors[i] is the kernel of the witness on every partition but i; it
  /// acts faithfully on partition i and the factors multiply to the witness.
  std::vector<PermGroup> factors;
  /// cofactors[i] is the kernel on partition i, the product of the other factors.
  std::vector<PermGroup> cofactors;
};

struct NormalityResult
{
  std::optional<NormalityCertificate> certificate;
  /// Offending partition when the factorization fails there.
  std::optional<std::size_t> partition;
  std::string reason;
};

/// m must fix every partition (else NotInvariant); an intransitive m or a
/// failed factorization gives a result without certificate.
NormalityResult is_M_normal(CellGroup const &m);
NormalityResult is_M_normal(PermGroup const &m, CartesianDecomposition const &e);

/// Candidate transitive normal subgroups fixing every partition, in search
/// order: minimal normal subgroups, products of them, then the kernel on
/// the partitions.
std::vector<PermGroup> normal_witness_candidates(CellGroup const &g);

/// First certificate over normal_witness_candidates.
std::optional<NormalityCertificate> is_normal_decomposition(CellGroup const &g);
std::optional<NormalityCertificate> is_normal_decomposition(PermGroup const &g, CartesianDecomposition const &e);

struct MorbitsViolation
{
  char part = 'a';
  std::size_t partition = 0;
  Point omega = 0;
  std::string detail;
};

struct MorbitsReport
{
  std::vector<MorbitsViolation> violations;
  std::size_t points_checked = 0;
  bool exhaustive = false;

  bool ok() const noexcept
  { return violations.empty(); }
};

struct MorbitsOptions
{
  std::size_t exhaustive_degree = 1024;
  std::size_t samples = 16;
};

/// Checks for every partition i and the chosen points omega:
///  (a) factors[i] is transitive on the cells of partition i;
///  (b) the stabilizer in factors[i] of the cell through omega is the
///      intersection of M_omega with factors[i];
///  (c) M_omega is the product of its intersections with the factors;
///  (d) the point orbits of cofactors[i] are the cells of partition i, and
///      cofactors[i] is the kernel of M on partition i.
MorbitsReport check_morbits(NormalityCertificate const &cert, CartesianDecomposition const &e,
                            MorbitsOptions const &opts = {});

struct BlowupResult
{
  bool blowup = false;
  bool transitive = false;
  std::optional<NormalityCertificate> certificate;
  std::string reason;
};

/// Throws NotInvariant.
BlowupResult is_blowup(CellGroup const &g);
BlowupResult is_blowup(PermGroup const &g, CartesianDecomposition const &e);

/// Evaluates Soc G-normality together with C_{G^Gamma}((Soc G)^Gamma) <= (Soc G)^Gamma
/// for every partition. Throws NotQuasiprimitive, NotInvariant.
bool blowup_criterion(CellGroup const &g);
bool blowup_criterion(PermGroup const &g, CartesianDecomposition const &e);

enum class TrichotomyCase
{
  Blowup,
  TwOverHsHc,
  DiagonalQuotient,
};

std::string_view to_string(TrichotomyCase c);

struct TrichotomyVerdict
{
  TrichotomyCase kind = TrichotomyCase::Blowup;
  /// The normality witness and its centralizer in G, on cells.
  PermGroup witness;
  PermGroup centralizer;
  /// |C_Sym(M)| when the witness is regular.
  std::optional<std::uint64_t> sym_centralizer_order;
  std::vector<QPType> component_types;
  std::optional<QPType> group_type;
};

/// Throws Precondition naming every failed precondition (transitive,
/// normal, components quasiprimitive), or when the case split contradicts
/// itself.
TrichotomyVerdict classify_trichotomy(CellGroup const &g);
TrichotomyVerdict classify_trichotomy(PermGroup const &g, CartesianDecomposition const &e);

struct MinimalNormalMap
{
  /// image[j] indexes component_normals for the K^Gamma of group_normals[j],
  /// or is empty when K^Gamma is not minimal normal in the component.
  std::vector<PermGroup> group_normals;      // on cells
  std::vector<PermGroup> component_normals;  // on the cells of the partition
  std::vector<std::optional<std::size_t>> image;
  bool injective = false;
  bool surjective = false;
};

/// K -> K^Gamma for the partition with index i, without preconditions.
MinimalNormalMap minimal_normal_map(CellGroup const &g, std::size_t i);

/// As minimal_normal_map, after checking that e is a blow-up decomposition,
/// the components are quasiprimitive and either the component socle is
/// non-abelian or G is quasiprimitive. Throws Precondition.
MinimalNormalMap minimal_normal_bijection(CellGroup const &g, std::size_t i = 0);

} // namespace cdecomp

#endif // CDECOMP_NORMAL_BLOWUP_HPP
