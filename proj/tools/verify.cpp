#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cdecomp/constructions.hpp"
#include "cdecomp/error.hpp"
#include "cdecomp/normal_blowup.hpp"
#include "cdecomp/quasi_types.hpp"
#include "cdecomp/structure.hpp"

namespace cdecomp::tools
{

namespace
{

struct Outcome
{
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, std::string const &what)
  {
    if (!cond) {
      ok = false;
      detail << "[fail] " << what << "; ";
    }
  }
};

struct Criterion
{
  int id;
  std::string scope;
  std::string title;
  double limit;
  std::function<void(Outcome &)> run;
};

CellGroup product_cells(PermGroup const &l, PermGroup const &top)
{
  auto w = wreath_product({l, top});
  return CellGroup(w.group, *w.decomposition);
}

PermGroup hs_group(PermGroup const &t)
{
  auto rr = regular_representation(t);
  std::vector<Perm> gens(rr.right.generators().begin(), rr.right.generators().end());
  gens.insert(gens.end(), rr.left.generators().begin(), rr.left.generators().end());
  return PermGroup(rr.right.degree(), std::move(gens));
}

CellGroup diagq_cells()
{
  auto ex = example_diagonal_quotient(alternating_group(5), 1, 2);
  return CellGroup(ex.group, ex.decomposition);
}

std::vector<std::pair<std::string, CellGroup>> quasiprimitive_corpus()
{
  std::vector<std::pair<std::string, CellGroup>> c;
  auto add = [&](std::string name, PermGroup const &l, PermGroup const &top) {
    c.emplace_back(std::move(name), product_cells(l, top));
  };
  add("AGL(1,3) wr S2", affine_line_group(3), symmetric_group(2));
  add("AGL(1,5) wr S2", affine_line_group(5), symmetric_group(2));
  add("AGL(1,7) wr S2", affine_line_group(7), symmetric_group(2));
  add("A4 wr S2", alternating_group(4), symmetric_group(2));
  add("S4 wr S2", symmetric_group(4), symmetric_group(2));
  add("AGL(1,3) wr S3", affine_line_group(3), symmetric_group(3));
  add("A5 wr S2", alternating_group(5), symmetric_group(2));
  add("S5 wr S2", symmetric_group(5), symmetric_group(2));
  add("A5 wr A3", alternating_group(5), alternating_group(3));
  add("PSL(2,7) wr S2", psl2_7(), symmetric_group(2));
  add("A6 wr S2", alternating_group(6), symmetric_group(2));
  add("A5reg wr S2", regular_representation(alternating_group(5)).right, symmetric_group(2));
  add("HS(A5) wr S2", hs_group(alternating_group(5)), symmetric_group(2));
  add("SD_A5 wr S2", named_group("SD_A5"), symmetric_group(2));
  add("(A5 wr S2) wr S2", wreath_product({alternating_group(5), symmetric_group(2)}).group, symmetric_group(2));
  c.emplace_back("twisted wreath", twisted_wreath(example_twisted_spec()).cells);
  return c;
}

void example_c3d8(Outcome &o)
{
  auto ex = example_c3_wr_d8();
  auto const &g = ex.wreath.group;
  auto const &e = *ex.wreath.decomposition;
  o.require(g.degree() == 81, "degree 81");
  o.require(g.order() == 648, "order 648");
  auto mins = minimal_normal_subgroups(g);
  o.require(mins.size() == 3, "three minimal normal subgroups");
  std::vector<PermGroup const *> want{&ex.m1, &ex.m2, &ex.m3};
  for (auto const &r : mins) {
    auto it = std::find_if(want.begin(), want.end(), [&](PermGroup const *w) { return same_group(*w, r.subgroup); });
    o.require(it != want.end(), "minimal normal of order " + std::to_string(r.subgroup.order()) + " is one of M1, M2, M3");
    if (it != want.end())
      want.erase(it);
  }
  o.require(ex.m1.order() == 3 && ex.m2.order() == 3 && ex.m3.order() == 9, "orders 3, 3, 9");
  for (std::size_t i = 0; i < e.index(); ++i)
    o.require(same_group(component(g, e, i), ex.h), "component " + std::to_string(i) + " equals H");
  o.require(!profile(g).quasiprimitive, "not quasiprimitive");
  o.detail << "order " << g.order() << ", " << mins.size() << " minimal normals; ";
}

bool is_invariant_everywhere(CellGroup const &cg)
{ return cg.partition_action_group().is_trivial(); }

void lemma_morbits(Outcome &o)
{
  std::vector<std::pair<std::string, CellGroup>> bases;
  auto add_base = [&](std::string name, PermGroup const &l, std::size_t k) {
    auto w = wreath_product({l, symmetric_group(k)});
    bases.emplace_back(std::move(name), CellGroup(w.base, *w.decomposition));
  };
  add_base("S3^2", symmetric_group(3), 2);
  add_base("C3^2", cyclic_group(3), 2);
  add_base("S3^3", symmetric_group(3), 3);
  add_base("A4^2", alternating_group(4), 2);
  add_base("S4^2", symmetric_group(4), 2);
  add_base("D8^2", dihedral_group(4), 2);
  add_base("AGL(1,5)^2", affine_line_group(5), 2);
  add_base("A5^2", alternating_group(5), 2);
  add_base("S5^2", symmetric_group(5), 2);
  add_base("PSL(2,7)^2", psl2_7(), 2);
  add_base("C3^4", cyclic_group(3), 4);
  add_base("A5^3", alternating_group(5), 3);
  auto c3 = example_c3_wr_d8();
  bases.emplace_back("C3 wr D8 socle factors", CellGroup(c3.wreath.group, *c3.wreath.decomposition));

  std::size_t certs = 0, violations = 0;
  for (auto const &[name, cg] : bases) {
    std::optional<NormalityCertificate> cert;
    if (is_invariant_everywhere(cg))
      cert = is_M_normal(cg).certificate;
    else
      cert = is_normal_decomposition(cg);
    o.require(cert.has_value(), name + " certificate");
    if (!cert)
      continue;
    auto rep = check_morbits(*cert, cg.decomposition());
    o.require(rep.exhaustive && rep.points_checked == cg.decomposition().degree(), name + " exhaustive over omega");
    violations += rep.violations.size();
    for (auto const &v : rep.violations)
      o.require(false, name + " part (" + std::string(1, v.part) + "): " + v.detail);
    ++certs;
  }
  // Twisted-wreath socle, checked at the cell scale with sampled points.
  auto tw = twisted_wreath(example_twisted_spec());
  auto r = is_M_normal(CellGroup(tw.decomposition, tw.socle));
  o.require(r.certificate.has_value(), "twisted socle certificate");
  if (r.certificate) {
    auto rep = check_morbits(*r.certificate, tw.decomposition);
    violations += rep.violations.size();
    o.require(rep.ok(), "twisted socle morbits");
    ++certs;
  }
  o.require(certs >= 10, "at least 10 certificates");
  o.detail << certs << " certificates, " << violations << " violations; ";
}

void unilem(Outcome &o)
{
  auto corpus = quasiprimitive_corpus();
  corpus.emplace_back("diagonal quotient", diagq_cells());
  std::size_t checked = 0;
  for (auto const &[name, cg] : corpus) {
    if (!is_normal_decomposition(cg))
      continue;
    for (auto const &r : minimal_normal_subgroups(cg.group())) {
      if (r.is_abelian || !cg.transitive_on_points(r.subgroup))
        continue;
      ++checked;
      o.require(is_M_normal(CellGroup(cg.decomposition(), r.subgroup)).certificate.has_value(), name + " M-normal");
      o.require(is_transitive(cg.partition_action_group()), name + " transitive on E");
    }
  }
  o.require(checked > 0, "some case qualifies");
  o.detail << checked << " (G, M, E) cases; ";
}

void corollary_blowup(Outcome &o)
{
  auto w = wreath_product({alternating_group(5), symmetric_group(2)});
  o.require(w.group.degree() == 25 && w.group.order() == 7200, "degree 25, order 7200");
  CellGroup cg(w.group, *w.decomposition);
  o.require(is_blowup(cg).blowup, "natural decomposition is a blow-up");
  auto t = qp_type(w.group);
  o.require(t.tag == QPTag::Pa && t.primitive_variant == QPTag::Pa, "type Pa/PA");
  auto soc = socle(cg.group());
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < cg.decomposition().index(); ++i) {
    auto const cs = socle(component(cg, i));
    for (auto const &s : cs.generators())
      gens.push_back(cg.extend(s, i));
  }
  o.require(soc.order() == 3600, "|Soc G| = 3600");
  o.require(same_group(soc, PermGroup(cg.decomposition().cell_degree(), gens)), "Soc G = product of component socles");
  o.detail << "Soc order " << soc.order() << "; ";
}

void r25_iff(Outcome &o)
{
  auto corpus = quasiprimitive_corpus();
  std::size_t disagreements = 0;
  std::string tags;
  for (auto const &[name, cg] : corpus) {
    o.require(profile(cg).quasiprimitive, name + " quasiprimitive");
    bool b = is_blowup(cg).blowup;
    bool c = blowup_criterion(cg);
    if (b != c) {
      ++disagreements;
      o.require(false, name + " disagreement");
    }
    auto comp = component(cg, 0);
    tags += name + ":" + std::string(to_string(qp_type(cg).tag)) + "/" +
            (profile(comp).quasiprimitive ? std::string(to_string(qp_type(comp).tag)) : "-") + " ";
  }
  o.require(corpus.size() >= 15, "at least 15 cases");
  o.detail << corpus.size() << " cases, " << disagreements << " disagreements; types " << tags << "; ";
}

void r2_diagonal_quotient(Outcome &o)
{
  auto cg = diagq_cells();
  o.require(cg.decomposition().degree() == 3600, "degree 3600");
  auto mins = minimal_normal_subgroups(cg.group());
  o.require(mins.size() == 2, "two minimal normal subgroups");
  if (mins.size() == 2) {
    auto const &a = mins[0].subgroup;
    auto const &b = mins[1].subgroup;
    o.require(a.order() == 60 && b.order() == 3600, "orders 60 and 3600");
    auto bl = cg.lift(b);
    auto al = cg.lift(a);
    o.require(is_regular(bl), "order 3600 regular");
    o.require(is_semiregular(al) && !is_transitive(al), "order 60 semiregular, intransitive");
  }
  auto d = diagonal_quotient_check(cg);
  o.require(d.evidence.has_value(), "diagonal quotient check positive: " + d.reason);
  auto comp = component(cg, 0);
  auto ct = qp_type(comp);
  o.require(ct.tag == QPTag::HS && ct.primitive_variant == QPTag::HS, "component primitive of type HS");
  auto v = classify_trichotomy(cg);
  o.require(v.kind == TrichotomyCase::DiagonalQuotient, "verdict DIAGONAL_QUOTIENT");
  o.require(!is_blowup(cg).blowup, "not a blow-up");
  o.detail << "verdict " << to_string(v.kind) << ", |C_G(M)| = " << v.centralizer.order() << "; ";
}

void main_sd_search(Outcome &o)
{
  auto g = named_group("SD_A5");
  o.require(g.degree() == 60 && qp_type(g).tag == QPTag::Sd, "SD_A5 of type Sd on 60 points");
  auto found = search_invariant_decompositions(g);
  o.require(found.empty(), "no invariant decomposition");
  o.detail << found.size() << " decompositions; ";
}

void main_cd_blowup(Outcome &o)
{
  auto cg = product_cells(named_group("SD_A5"), symmetric_group(2));
  o.require(cg.decomposition().degree() == 3600, "degree 3600");
  o.require(qp_type(cg).tag == QPTag::Cd, "G of type Cd");
  o.require(is_blowup(cg).blowup, "blow-up");
  o.require(classify_trichotomy(cg).kind == TrichotomyCase::Blowup, "verdict BLOWUP");
  for (std::size_t i = 0; i < 2; ++i)
    o.require(qp_type(component(cg, i)).tag == QPTag::Sd, "component " + std::to_string(i) + " of type Sd");
}

void twisted(Outcome &o)
{
  auto tw = twisted_wreath(example_twisted_spec());
  auto comp = component(tw.cells, 0);
  o.require(comp.degree() == 60, "component of degree 60");
  bool regular_a5 = false, intransitive_2 = false;
  for (auto const &r : minimal_normal_subgroups(comp)) {
    if (r.subgroup.order() == 60 && is_regular(r.subgroup) && is_simple(r.subgroup))
      regular_a5 = true;
    if (r.subgroup.order() == 2 && !is_transitive(r.subgroup))
      intransitive_2 = true;
  }
  o.require(regular_a5, "regular normal subgroup isomorphic to A5");
  o.require(intransitive_2, "intransitive normal subgroup of order 2");
  o.require(!profile(comp).quasiprimitive, "component not quasiprimitive");
  o.require(is_M_normal(CellGroup(tw.decomposition, socle(tw.cells.group()))).certificate.has_value(),
            "Soc-normal");
  o.require(!is_blowup(tw.cells).blowup, "not a blow-up");
}

using ElementSet = std::unordered_set<Perm, PermHash>;

ElementSet closure(std::vector<Perm> const &gens, std::size_t n)
{
  ElementSet elems{Perm(n)};
  std::vector<Perm> queue{Perm(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &s : gens) {
      Perm y = queue[i] * s;
      if (elems.insert(y).second)
        queue.push_back(std::move(y));
    }
  return elems;
}

Perm random_perm(std::size_t n, std::size_t moved, std::mt19937_64 &rng)
{
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(std::min(moved, n));
  auto shuffled = pts;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = shuffled[i];
  return Perm(std::move(img));
}

void kernel_oracles(Outcome &o)
{
  std::mt19937_64 rng(20261014);
  std::size_t groups = 0, disagreements = 0;
  auto check = [&](bool cond, std::string const &what) {
    if (!cond)
      ++disagreements;
    o.require(cond, what);
  };
  while (groups < 50) {
    std::size_t n = 5 + rng() % 6;
    std::vector<Perm> gens{random_perm(n, 2 + rng() % (n - 1), rng), random_perm(n, 2 + rng() % (n - 1), rng)};
    PermGroup g(n, gens);
    if (g.is_trivial() || g.order() > 10'000)
      continue;
    ++groups;
    auto elems = closure(gens, n);
    std::vector<Perm> list(elems.begin(), elems.end());
    std::string tag = "group " + std::to_string(groups) + " (order " + std::to_string(elems.size()) + ")";
    check(g.order() == elems.size(), tag + " order");

    for (int t = 0; t < 20; ++t) {
      Perm x = t % 2 ? list[rng() % list.size()] * list[rng() % list.size()] : random_perm(n, n, rng);
      check(g.contains(x) == elems.contains(x), tag + " membership");
    }

    Perm h = list[rng() % list.size()];
    PermGroup hg(n, {h});
    auto c = centralizer_in(g, hg);
    std::size_t count = 0;
    bool members = true;
    for (auto const &x : list)
      if (x * h == h * x) {
        ++count;
        members = members && c.contains(x);
      }
    check(c.order() == count && members, tag + " centralizer");

    std::vector<Point> set;
    for (Point p = 0; p < n; ++p)
      if (rng() % 2)
        set.push_back(p);
    if (set.empty() || set.size() == n)
      set = {0, static_cast<Point>(n - 1)};
    std::vector<char> in(n, 0);
    for (auto p : set)
      in[p] = 1;
    auto stab = setwise_stabilizer(g, set);
    count = 0;
    members = true;
    for (auto const &x : list) {
      bool fixes = std::all_of(set.begin(), set.end(), [&](Point p) { return in[x[p]] != 0; });
      if (fixes) {
        ++count;
        members = members && stab.contains(x);
      }
    }
    check(stab.order() == count && members, tag + " setwise stabilizer");
  }
  o.detail << groups << " groups, " << disagreements << " disagreements; ";
}

std::vector<Criterion> const &criteria()
{
  static std::vector<Criterion> const all{
    {1, "example-c3d8", "C3 wr D8 on 81 points", 5, example_c3d8},
    {2, "lemma-morbits", "morbits parts (a)-(d) on constructed certificates", 60, lemma_morbits},
    {3, "unilem", "transitive non-abelian minimal normals witness normality", 120, unilem},
    {4, "corollary-blowup", "(A5 on 5) wr S2 is a blow-up of type Pa", 5, corollary_blowup},
    {5, "blowup-iff", "is_blowup agrees with the centralizer criterion", 120, r25_iff},
    {6, "trichotomy-diagonal", "diagonal quotient example on 3600 points", 60, r2_diagonal_quotient},
    {7, "main-sd", "no invariant decomposition for SD_A5", 120, main_sd_search},
    {8, "main-cd", "(SD_A5) wr S2 blow-up with Sd components", 120, main_cd_blowup},
    {9, "twisted-wreath", "twisted wreath component is not quasiprimitive", 60, twisted},
    {10, "kernel-oracles", "kernel operations against enumeration oracles", 60, kernel_oracles},
  };
  return all;
}

} // namespace

std::vector<std::string> const &verification_scopes()
{
  static std::vector<std::string> const scopes = [] {
    std::vector<std::string> s;
    for (auto const &c : criteria())
      s.push_back(c.scope);
    s.push_back("all");
    return s;
  }();
  return scopes;
}

std::vector<CriterionResult> run_verification(std::string const &scope)
{
  auto const &scopes = verification_scopes();
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end())
    throw std::invalid_argument("unknown scope '" + scope + "'");
  std::vector<CriterionResult> res;
  for (auto const &c : criteria()) {
    if (scope != "all" && scope != c.scope)
      continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (std::exception const &e) {
      o.ok = false;
      o.detail << "[exception] " << e.what() << "; ";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.push_back({c.id, c.scope, c.title, o.ok, secs, c.limit, o.detail.str()});
  }
  return res;
}

std::string format_results(std::vector<CriterionResult> const &results)
{
  std::ostringstream ss;
  std::size_t passed = 0;
  for (auto const &r : results) {
    passed += r.pass();
    ss << (r.pass() ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(20) << r.scope
       << std::right << std::fixed << std::setprecision(3) << std::setw(9) << r.seconds << " s  (limit "
       << std::setprecision(0) << r.limit_seconds << " s)  " << r.title;
    if (!r.ok)
      ss << "  [" << r.detail << "]";
    else if (!r.pass())
      ss << "  [over time limit]";
    ss << "\n";
  }
  ss << passed << "/" << results.size() << " criteria passed\n";
  return ss.str();
}

} // namespace cdecomp::tools
