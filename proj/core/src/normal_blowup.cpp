#include "cdecomp/normal_blowup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "cdecomp/error.hpp"
#include "cdecomp/structure.hpp"

namespace cdecomp
{

namespace
{

bool fixes_partitions(CartesianDecomposition const &e, std::span<Perm const> cell_gens)
{
  for (auto const &s : cell_gens)
    for (std::size_t i = 0; i < e.index(); ++i)
      if (e.partition_of_cell(s[static_cast<Point>(e.offset(i))]) != i)
        return false;
  return true;
}

std::vector<std::size_t> all_but(std::size_t l, std::size_t i)
{
  std::vector<std::size_t> res;
  for (std::size_t j = 0; j < l; ++j)
    if (j != i)
      res.push_back(j);
  return res;
}

/// Group induced on the cells of partition i by a group fixing it.
PermGroup restricted(CellGroup const &cg, PermGroup const &h, std::size_t i)
{
  std::vector<Perm> gens;
  for (auto const &c : h.generators())
    gens.push_back(cg.restrict(c, i));
  return PermGroup(cg.decomposition().partition(i).size(), std::move(gens));
}

PermGroup product_of(std::size_t degree, std::span<PermGroup const> groups)
{
  std::vector<Perm> gens;
  for (auto const &h : groups)
    gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  return PermGroup(degree, std::move(gens));
}

/// Points of Omega forming cell c of partition i.
std::vector<Point> cell_points(CartesianDecomposition const &e, std::size_t i, std::size_t c)
{
  auto pts = e.partition(i).cell(c);
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Point> cells_through(CartesianDecomposition const &e, Point p)
{
  auto t = cells_of_point(e, p);
  std::vector<Point> cells;
  for (std::size_t i = 0; i < t.size(); ++i)
    cells.push_back(static_cast<Point>(e.offset(i) + t[i]));
  return cells;
}

bool is_blowup_witness(CellGroup const &cg, NormalityCertificate const &cert,
                       std::vector<PermGroup> const &comp_socles)
{
  for (std::size_t i = 0; i < cert.factors.size(); ++i)
    if (!same_group(restricted(cg, cert.factors[i], i), comp_socles[i]))
      return false;
  return true;
}

std::vector<PermGroup> component_socles(CellGroup const &cg)
{
  std::vector<PermGroup> res;
  for (std::size_t i = 0; i < cg.decomposition().index(); ++i)
    res.push_back(socle(component(cg, i)));
  return res;
}

} // namespace

NormalityResult is_M_normal(CellGroup const &m)
{
  auto const &e = m.decomposition();
  auto const &g = m.group();
  if (!fixes_partitions(e, g.generators()))
    throw Error(ErrorCode::NotInvariant, "M must fix every partition of the decomposition");
  NormalityResult res;
  if (!m.transitive_on_points(g)) {
    res.reason = "M is not transitive";
    return res;
  }
  std::size_t const l = e.index();
  NormalityCertificate cert;
  cert.witness = g;
  for (std::size_t i = 0; i < l; ++i) {
    auto others = all_but(l, i);
    std::size_t const self[] = {i};
    auto f = m.kernel_on(g, others);
    auto k = m.kernel_on(g, self);
    // f acts faithfully on partition i, so M = f x k iff the orders multiply.
    if (f.order() * k.order() != g.order() || f.is_trivial()) {
      res.partition = i;
      res.reason = "no faithful direct factor complementing the kernel on partition " + std::to_string(i) +
                   " (|F| = " + std::to_string(f.order()) + ", |kernel| = " + std::to_string(k.order()) +
                   ", |M| = " + std::to_string(g.order()) + ")";
      return res;
    }
    cert.factors.push_back(std::move(f));
    cert.cofactors.push_back(std::move(k));
  }
  std::uint64_t prod = 1;
  for (auto const &f : cert.factors) {
    if (prod > g.order() / f.order()) {
      prod = 0;
      break;
    }
    prod *= f.order();
  }
  if (prod != g.order()) {
    res.partition = 0;
    res.reason = "factors do not multiply to M";
    return res;
  }
  res.certificate = std::move(cert);
  return res;
}

NormalityResult is_M_normal(PermGroup const &m, CartesianDecomposition const &e)
{ return is_M_normal(CellGroup(m, std::move(e))); }

std::vector<PermGroup> normal_witness_candidates(CellGroup const &g)
{
  auto const &e = g.decomposition();
  std::vector<PermGroup> res;
  auto add = [&](PermGroup h) {
    if (h.is_trivial() || !fixes_partitions(e, h.generators()) || !g.transitive_on_points(h))
      return;
    for (auto const &r : res)
      if (same_group(r, h))
        return;
    res.push_back(std::move(h));
  };
  std::vector<PermGroup> mins;
  for (auto &r : minimal_normal_subgroups(g.group()))
    mins.push_back(std::move(r.subgroup));
  for (auto const &n : mins)
    add(n);
  std::size_t const cap = std::min<std::size_t>(mins.size(), 10);
  for (std::uint32_t mask = 1; mask < (1u << cap); ++mask) {
    if (std::popcount(mask) < 2)
      continue;
    std::vector<PermGroup> chosen;
    for (std::size_t j = 0; j < cap; ++j)
      if (mask & (1u << j))
        chosen.push_back(mins[j]);
    add(product_of(e.cell_degree(), chosen));
  }
  // Kernel of the action on the partitions.
  std::vector<Perm> images;
  for (auto const &s : g.group().generators()) {
    std::vector<Point> img(e.index());
    for (std::size_t i = 0; i < e.index(); ++i)
      img[i] = static_cast<Point>(e.partition_of_cell(s[static_cast<Point>(e.offset(i))]));
    images.emplace_back(std::move(img));
  }
  std::vector<Point> all(e.index());
  std::iota(all.begin(), all.end(), Point{0});
  add(action_stabilizer(g.group(), images, e.index(), all));
  return res;
}

std::optional<NormalityCertificate> is_normal_decomposition(CellGroup const &g)
{
  for (auto const &m : normal_witness_candidates(g)) {
    auto r = is_M_normal(CellGroup(g.decomposition(), m));
    if (r.certificate)
      return std::move(r.certificate);
  }
  return std::nullopt;
}

std::optional<NormalityCertificate> is_normal_decomposition(PermGroup const &g, CartesianDecomposition const &e)
{ return is_normal_decomposition(CellGroup(g, e)); }

MorbitsReport check_morbits(NormalityCertificate const &cert, CartesianDecomposition const &e,
                            MorbitsOptions const &opts)
{
  CellGroup cm(e, cert.witness);
  auto const &m = cert.witness;
  std::size_t const l = e.index();
  MorbitsReport rep;
  auto violate = [&](char part, std::size_t i, Point w, std::string detail) {
    rep.violations.push_back({part, i, w, std::move(detail)});
  };

  for (std::size_t i = 0; i < l; ++i) {
    auto fi = restricted(cm, cert.factors[i], i);
    if (orbit(fi, 0).size() != e.partition(i).size())
      violate('a', i, 0, "factor is not transitive on the cells");

    std::vector<PermGroup> others;
    for (auto j : all_but(l, i))
      others.push_back(cert.factors[j]);
    auto bar = product_of(e.cell_degree(), others);
    std::size_t const self[] = {i};
    if (!same_group(bar, cert.cofactors[i]) || !same_group(bar, cm.kernel_on(m, self)))
      violate('d', i, 0, "product of the other factors is not the kernel on the partition");
    for (std::size_t c = 0; c < e.partition(i).size(); ++c) {
      auto cell = cell_points(e, i, c);
      if (cm.point_orbit(bar.generators(), cell.front()) != cell) {
        violate('d', i, cell.front(), "orbit of the cofactor differs from cell " + std::to_string(c));
        break;
      }
    }
  }

  std::vector<Point> omegas;
  if (e.degree() <= opts.exhaustive_degree) {
    omegas.resize(e.degree());
    std::iota(omegas.begin(), omegas.end(), Point{0});
    rep.exhaustive = true;
  } else {
    auto rng = make_rng(0x6d6f72);
    omegas.push_back(0);
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(e.degree() - 1));
    while (omegas.size() < opts.samples)
      omegas.push_back(pick(rng));
  }
  for (Point w : omegas) {
    auto through = cells_through(e, w);
    auto m_omega = pointwise_stabilizer(m, through);
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < l; ++i) {
      auto meet = intersection(m_omega, cert.factors[i]);
      auto stab = point_stabilizer(cert.factors[i], through[i]);
      if (!same_group(meet, stab))
        violate('b', i, w, "cell stabilizer in the factor differs from M_omega meet factor");
      prod *= meet.order();
    }
    if (prod != m_omega.order())
      violate('c', 0, w, "|M_omega| = " + std::to_string(m_omega.order()) + " but the intersections multiply to " +
                             std::to_string(prod));
    ++rep.points_checked;
  }
  return rep;
}

BlowupResult is_blowup(CellGroup const &g)
{
  BlowupResult res;
  res.transitive = is_transitive(g.partition_action_group());
  if (!res.transitive) {
    res.reason = "not transitive on the partitions";
    return res;
  }
  auto socles = component_socles(g);
  bool normal = false;
  for (auto const &m : normal_witness_candidates(g)) {
    auto r = is_M_normal(CellGroup(g.decomposition(), m));
    if (!r.certificate)
      continue;
    normal = true;
    if (is_blowup_witness(g, *r.certificate, socles)) {
      res.blowup = true;
      res.certificate = std::move(r.certificate);
      return res;
    }
    if (!res.certificate)
      res.certificate = std::move(r.certificate);
  }
  res.reason = normal ? "no normality witness whose factors are the component socles" : "not a normal decomposition";
  return res;
}

BlowupResult is_blowup(PermGroup const &g, CartesianDecomposition const &e)
{ return is_blowup(CellGroup(g, e)); }

bool blowup_criterion(CellGroup const &g)
{
  if (!profile(g).quasiprimitive)
    throw Error(ErrorCode::NotQuasiprimitive, "blowup criterion needs a quasiprimitive group");
  if (!is_transitive(g.partition_action_group()))
    return false;
  auto s = socle(g.group());
  auto const &e = g.decomposition();
  if (!fixes_partitions(e, s.generators()))
    return false;
  if (!is_M_normal(CellGroup(e, s)).certificate)
    return false;
  for (std::size_t i = 0; i < e.index(); ++i) {
    auto s_i = restricted(g, s, i);
    if (!s_i.contains(centralizer_in(component(g, i), s_i)))
      return false;
  }
  return true;
}

bool blowup_criterion(PermGroup const &g, CartesianDecomposition const &e)
{ return blowup_criterion(CellGroup(g, e)); }

std::string_view to_string(TrichotomyCase c)
{
  switch (c) {
  case TrichotomyCase::Blowup: return "BLOWUP";
  case TrichotomyCase::TwOverHsHc: return "TW_OVER_HSHC";
  case TrichotomyCase::DiagonalQuotient: return "DIAGONAL_QUOTIENT";
  }
  return "?";
}

TrichotomyVerdict classify_trichotomy(CellGroup const &g)
{
  auto const &e = g.decomposition();
  std::vector<std::string> failed;
  if (!is_transitive(g.partition_action_group()))
    failed.push_back("not transitive on the partitions");
  auto cert = is_normal_decomposition(g);
  if (!cert)
    failed.push_back("not a normal decomposition");
  TrichotomyVerdict v;
  for (std::size_t i = 0; i < e.index(); ++i) {
    auto c = component(g, i);
    if (!is_transitive(c) || !profile(c).quasiprimitive) {
      failed.push_back("component " + std::to_string(i) + " is not quasiprimitive");
      continue;
    }
    v.component_types.push_back(qp_type(c));
  }
  if (!failed.empty()) {
    std::string msg = "trichotomy preconditions failed:";
    for (auto const &f : failed)
      msg += " " + f + ";";
    throw Error(ErrorCode::Precondition, msg);
  }

  auto b = is_blowup(g);
  if (b.blowup) {
    v.kind = TrichotomyCase::Blowup;
    v.witness = b.certificate->witness;
    v.centralizer = centralizer_in(g.group(), v.witness);
    return v;
  }
  v.witness = cert->witness;
  if (v.witness.order() != e.degree())
    throw Error(ErrorCode::Precondition, "non-blow-up normal decomposition with a non-regular witness");
  v.sym_centralizer_order = v.witness.order();
  v.centralizer = centralizer_in(g.group(), v.witness);
  auto const c = v.centralizer.order();
  if (c == v.witness.order())
    throw Error(ErrorCode::Precondition, "C_Sym(M) lies in G, yet the decomposition is not a blow-up");
  if (c == 1) {
    v.kind = TrichotomyCase::TwOverHsHc;
    v.group_type = qp_type(g);
    bool hs_hc = std::all_of(v.component_types.begin(), v.component_types.end(), [](QPType const &t) {
      return t.tag == QPTag::HS || t.tag == QPTag::HC;
    });
    if (v.group_type->tag != QPTag::Tw || !hs_hc)
      throw Error(ErrorCode::Precondition, "trivial C_G(M) without type Tw over HS/HC components");
    return v;
  }
  v.kind = TrichotomyCase::DiagonalQuotient;
  return v;
}

TrichotomyVerdict classify_trichotomy(PermGroup const &g, CartesianDecomposition const &e)
{ return classify_trichotomy(CellGroup(g, e)); }

MinimalNormalMap minimal_normal_map(CellGroup const &g, std::size_t i)
{
  auto const &e = g.decomposition();
  MinimalNormalMap res;
  for (auto &r : minimal_normal_subgroups(g.group()))
    res.group_normals.push_back(std::move(r.subgroup));
  for (auto &r : minimal_normal_subgroups(component(g, i)))
    res.component_normals.push_back(std::move(r.subgroup));
  std::vector<int> hits(res.component_normals.size(), 0);
  res.injective = true;
  for (auto const &k : res.group_normals) {
    auto image = component(CellGroup(e, k), i);
    std::optional<std::size_t> at;
    for (std::size_t j = 0; j < res.component_normals.size(); ++j)
      if (same_group(image, res.component_normals[j]))
        at = j;
    if (at && hits[*at]++)
      res.injective = false;
    if (!at)
      res.injective = false;
    res.image.push_back(at);
  }
  res.surjective = std::all_of(hits.begin(), hits.end(), [](int h) { return h > 0; });
  return res;
}

MinimalNormalMap minimal_normal_bijection(CellGroup const &g, std::size_t i)
{
  std::vector<std::string> failed;
  if (!is_blowup(g).blowup)
    failed.push_back("not a blow-up decomposition");
  bool non_abelian_socle = true;
  for (std::size_t j = 0; j < g.decomposition().index(); ++j) {
    auto c = component(g, j);
    auto p = profile(c);
    if (!p.quasiprimitive)
      failed.push_back("component " + std::to_string(j) + " is not quasiprimitive");
    for (auto const &r : p.minimal_normals)
      non_abelian_socle = non_abelian_socle && !r.is_abelian;
  }
  if (!non_abelian_socle && !profile(g).quasiprimitive)
    failed.push_back("abelian component socle and G not quasiprimitive");
  if (!failed.empty()) {
    std::string msg = "minimal normal bijection preconditions failed:";
    for (auto const &f : failed)
      msg += " " + f + ";";
    throw Error(ErrorCode::Precondition, msg);
  }
  return minimal_normal_map(g, i);
}

} // namespace cdecomp
