#include "cdecomp/quasi_types.hpp"

#include <cmath>
#include <functional>

#include "cdecomp/error.hpp"

namespace cdecomp
{

namespace
{

// A faithful action of `group` on some set, standing for its action on the
// n points of Omega (the identity for point groups, the cell set otherwise).
struct Action
{
  PermGroup const &group;
  std::size_t degree;
  std::function<bool(PermGroup const &)> transitive;
  std::function<PermGroup(PermGroup const &)> stabilizer;   // of point 0
  std::function<PermGroup(PermGroup const &)> lift;         // to points
  std::function<std::optional<bool>()> primitive;
};

Action point_action(PermGroup const &g)
{
  return {g,
          g.degree(),
          [](PermGroup const &h) { return is_transitive(h); },
          [](PermGroup const &h) { return point_stabilizer(h, 0); },
          [](PermGroup const &h) { return h; },
          [&g]() -> std::optional<bool> { return is_primitive(g); }};
}

Action cell_action(CellGroup const &cg, std::size_t max_primitivity_degree)
{
  return {cg.group(),
          cg.decomposition().degree(),
          [&cg](PermGroup const &h) { return cg.transitive_on_points(h); },
          [&cg](PermGroup const &h) { return cg.point_stabilizer(h, 0); },
          [&cg](PermGroup const &h) { return cg.lift(h); },
          [&cg, max_primitivity_degree]() -> std::optional<bool> {
            if (cg.decomposition().degree() > max_primitivity_degree)
              return std::nullopt;
            return is_primitive(cg.lift(cg.group()));
          }};
}

TransitivityProfile profile_of(Action const &a)
{
  if (!a.transitive(a.group))
    throw Error(ErrorCode::NotTransitive, "profile needs a transitive group");
  TransitivityProfile p;
  p.minimal_normals = minimal_normal_subgroups(a.group);
  for (auto &r : p.minimal_normals) {
    r.is_transitive = a.transitive(r.subgroup);
    p.transitive_count += r.is_transitive;
  }
  p.quasiprimitive = p.transitive_count == p.minimal_normals.size();
  p.innately_transitive = p.transitive_count > 0;
  return p;
}

QPType qp_type_of(Action const &a)
{
  auto p = profile_of(a);
  if (!p.quasiprimitive)
    throw Error(ErrorCode::NotQuasiprimitive, "qp_type needs a quasiprimitive group (" +
                                                  std::to_string(p.minimal_normals.size() - p.transitive_count) +
                                                  " intransitive minimal normal subgroups)");
  auto const &m = p.minimal_normals.front().subgroup;
  QPType t;
  auto always_primitive = [&](QPTag tag) {
    t.tag = tag;
    t.primitive_variant = tag;
    return t;
  };
  if (p.transitive_count >= 2)
    return always_primitive(simple_direct_factors(m).factors.size() == 1 ? QPTag::HS : QPTag::HC);
  if (p.minimal_normals.front().is_abelian)
    return always_primitive(QPTag::HA);

  auto fact = simple_direct_factors(m);
  if (fact.factors.size() == 1) {
    t.tag = QPTag::As;
  } else {
    auto m_omega = a.stabilizer(m);
    if (m_omega.is_trivial())
      t.tag = QPTag::Tw;
    else if (!is_subdirect(m_omega, fact))
      t.tag = QPTag::Pa;
    else
      t.tag = is_simple(m_omega) ? QPTag::Sd : QPTag::Cd;
  }
  if (auto prim = a.primitive(); prim && *prim)
    t.primitive_variant = t.tag;
  return t;
}

DiagonalQuotientCheck diagonal_quotient_of(Action const &a)
{
  DiagonalQuotientCheck res;
  std::vector<NormalSubgroupRecord> mins;
  try {
    mins = minimal_normal_subgroups(a.group);
  } catch (Error const &e) {
    res.reason = e.what();
    return res;
  }
  std::optional<PermGroup> m1;
  std::size_t k = 0;
  for (auto const &r : mins) {
    if (r.is_abelian || r.subgroup.order() != a.degree || !a.transitive(r.subgroup))
      continue;
    auto f = simple_direct_factors(r.subgroup);
    if (f.factors.size() < 2)
      continue;
    m1 = r.subgroup;
    k = f.factors.size();
    break;
  }
  if (!m1) {
    res.reason = "no non-abelian, non-simple, regular minimal normal subgroup";
    return res;
  }
  auto c = centralizer_in(a.group, *m1);
  if (c.is_trivial()) {
    res.reason = "C_G(M1) is trivial, hence not subdirect";
    return res;
  }
  auto m1_points = a.lift(*m1);
  auto c_points = a.lift(c);
  auto csym = centralizer_in_sym_of_regular(m1_points);
  if (!csym.contains(c_points))
    throw Error(ErrorCode::Precondition, "C_G(M1) not inside C_Sym(M1)");
  if (c_points.order() == csym.order()) {
    res.reason = "C_G(M1) equals C_Sym(M1), not proper";
    return res;
  }
  auto fact = simple_direct_factors(csym);
  if (!is_subdirect(c_points, fact)) {
    res.reason = "C_G(M1) is not subdirect in C_Sym(M1)";
    return res;
  }
  // |C_G(M1)| = |T|^(k/m).
  double t_order = static_cast<double>(fact.factors.front().order());
  auto kc = static_cast<std::size_t>(std::llround(std::log(static_cast<double>(c_points.order())) / std::log(t_order)));
  DiagonalQuotientEvidence ev{m1_points, c_points, csym, k, kc ? k / kc : 0};
  res.evidence = std::move(ev);
  return res;
}

} // namespace

std::string_view to_string(QPTag tag)
{
  switch (tag) {
  case QPTag::HA: return "HA";
  case QPTag::HS: return "HS";
  case QPTag::HC: return "HC";
  case QPTag::Sd: return "Sd";
  case QPTag::Cd: return "Cd";
  case QPTag::Pa: return "Pa";
  case QPTag::As: return "As";
  case QPTag::Tw: return "Tw";
  }
  return "?";
}

std::string_view primitive_name(QPTag tag)
{
  switch (tag) {
  case QPTag::HA: return "HA";
  case QPTag::HS: return "HS";
  case QPTag::HC: return "HC";
  case QPTag::Sd: return "SD";
  case QPTag::Cd: return "CD";
  case QPTag::Pa: return "PA";
  case QPTag::As: return "AS";
  case QPTag::Tw: return "TW";
  }
  return "?";
}

TransitivityProfile profile(PermGroup const &g)
{ return profile_of(point_action(g)); }

TransitivityProfile profile(CellGroup const &g)
{ return profile_of(cell_action(g, 0)); }

QPType qp_type(PermGroup const &g)
{ return qp_type_of(point_action(g)); }

QPType qp_type(CellGroup const &g, std::size_t max_primitivity_degree)
{ return qp_type_of(cell_action(g, max_primitivity_degree)); }

bool is_primitive(PermGroup const &g)
{
  if (!is_transitive(g))
    throw Error(ErrorCode::NotTransitive, "primitivity needs a transitive group");
  return minimal_block_systems(g).empty();
}

DiagonalQuotientCheck diagonal_quotient_check(PermGroup const &g)
{ return diagonal_quotient_of(point_action(g)); }

DiagonalQuotientCheck diagonal_quotient_check(CellGroup const &g)
{ return diagonal_quotient_of(cell_action(g, 0)); }

} // namespace cdecomp
