#include "doctest.h"

#include "cdecomp/constructions.hpp"
#include "cdecomp/error.hpp"
#include "cdecomp/quasi_types.hpp"
#include "oracles.hpp"

using namespace cdecomp;
using oracle::P;

namespace
{

std::vector<Perm> gens_of(PermGroup const &g)
{ return {g.generators().begin(), g.generators().end()}; }

template <class F>
ErrorCode error_of(F &&f)
{
  try {
    f();
  } catch (Error const &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Precondition;
}

std::string label(QPType t)
{
  std::string s(to_string(t.tag));
  s += "/";
  s += t.primitive_variant ? std::string(primitive_name(*t.primitive_variant)) : "-";
  return s;
}

PermGroup hs_group(PermGroup const &t)
{
  auto rr = regular_representation(t);
  auto gens = gens_of(rr.right);
  for (auto const &s : rr.left.generators())
    gens.push_back(s);
  return PermGroup(rr.right.degree(), gens);
}

CellGroup product_cells(PermGroup const &l, std::size_t k)
{
  auto w = wreath_product({l, symmetric_group(k)});
  return CellGroup(w.group, *w.decomposition);
}

std::vector<PermGroup> small_transitive_corpus()
{
  std::vector<PermGroup> c{symmetric_group(3),
                           symmetric_group(4),
                           alternating_group(4),
                           dihedral_group(4),
                           cyclic_group(4),
                           cyclic_group(5),
                           dihedral_group(5),
                           affine_line_group(5),
                           alternating_group(5),
                           symmetric_group(5),
                           cyclic_group(6),
                           dihedral_group(6),
                           affine_line_group(7),
                           psl2_7(),
                           named_group("V4"),
                           wreath_product({symmetric_group(3), symmetric_group(2)}).group,
                           wreath_product({cyclic_group(3), cyclic_group(2)}).group,
                           wreath_product({symmetric_group(3), symmetric_group(2), WreathAction::Imprimitive}).group,
                           wreath_product({cyclic_group(2), symmetric_group(3), WreathAction::Imprimitive}).group,
                           wreath_product({cyclic_group(2), cyclic_group(4), WreathAction::Imprimitive}).group,
                           PermGroup(8, {P(8, "(0 1 2 3 4 5 6 7)"), P(8, "(1 3)(5 7)")}),
                           PermGroup(6, {P(6, "(0 1 2)(3 4 5)"), P(6, "(0 3)")})};
  return c;
}

} // namespace

TEST_CASE("type examples at point scale")
{
  CHECK(label(qp_type(affine_line_group(5))) == "HA/HA");
  CHECK(label(qp_type(symmetric_group(3))) == "HA/HA");
  CHECK(label(qp_type(alternating_group(5))) == "As/AS");
  CHECK(label(qp_type(symmetric_group(5))) == "As/AS");
  CHECK(label(qp_type(psl2_7())) == "As/AS");
  CHECK(label(qp_type(named_group("SD_A5"))) == "Sd/SD");
  CHECK(label(qp_type(simple_diagonal_group(psl2_7()))) == "Sd/SD");
  CHECK(label(qp_type(wreath_product({alternating_group(5), symmetric_group(2)}).group)) == "Pa/PA");
  CHECK(label(qp_type(hs_group(alternating_group(5)))) == "HS/HS");
  CHECK(label(qp_type(holomorph(regular_representation(alternating_group(5)).right))) == "HS/HS");
  // A simple group in a regular action is quasiprimitive but not primitive.
  CHECK(label(qp_type(regular_representation(alternating_group(5)).right)) == "As/-");
}

TEST_CASE("type examples at cell scale")
{
  SUBCASE("Cd from the simple diagonal group in product action")
  {
    auto cg = product_cells(named_group("SD_A5"), 2);
    CHECK(cg.decomposition().degree() == 3600);
    CHECK(label(qp_type(cg)) == "Cd/CD");
    // Above the primitivity bound the variant is not decided.
    CHECK(label(qp_type(cg, 100)) == "Cd/-");
  }
  SUBCASE("HC from the HS group in product action")
  {
    auto cg = product_cells(hs_group(alternating_group(5)), 2);
    CHECK(label(qp_type(cg)) == "HC/HC");
  }
  SUBCASE("Tw from a regular simple group in product action")
  {
    auto cg = product_cells(regular_representation(alternating_group(5)).right, 2);
    auto t = qp_type(cg);
    CHECK(label(t) == "Tw/-");
  }
  SUBCASE("Tw from the twisted wreath example")
  {
    auto tw = twisted_wreath(example_twisted_spec());
    CHECK(label(qp_type(tw.cells)) == "Tw/-");
  }
  SUBCASE("Pa agrees across scales")
  {
    auto w = wreath_product({alternating_group(5), symmetric_group(2)});
    CHECK(label(qp_type(CellGroup(w.group, *w.decomposition))) == label(qp_type(w.group)));
  }
}

TEST_CASE("profiles of the non-quasiprimitive examples")
{
  auto ex = example_c3_wr_d8();
  auto p = profile(ex.wreath.group);
  CHECK(p.minimal_normals.size() == 3);
  CHECK(p.transitive_count == 0);
  CHECK_FALSE(p.quasiprimitive);
  CHECK_FALSE(p.innately_transitive);
  CHECK(error_of([&] { qp_type(ex.wreath.group); }) == ErrorCode::NotQuasiprimitive);

  auto dq = example_diagonal_quotient(alternating_group(5), 1, 2);
  CellGroup cg(dq.group, dq.decomposition);
  auto q = profile(cg);
  REQUIRE(q.minimal_normals.size() == 2);
  CHECK(q.minimal_normals[0].subgroup.order() == 60);
  CHECK_FALSE(q.minimal_normals[0].is_transitive);
  CHECK(q.minimal_normals[1].subgroup.order() == 3600);
  CHECK(q.minimal_normals[1].is_transitive);
  CHECK(q.innately_transitive);
  CHECK_FALSE(q.quasiprimitive);
  CHECK(error_of([&] { qp_type(cg); }) == ErrorCode::NotQuasiprimitive);
}

TEST_CASE("input errors")
{
  PermGroup intransitive(4, {P(4, "(0 1)")});
  CHECK(error_of([&] { profile(intransitive); }) == ErrorCode::NotTransitive);
  CHECK(error_of([&] { is_primitive(intransitive); }) == ErrorCode::NotTransitive);
  CHECK(error_of([&] { qp_type(intransitive); }) == ErrorCode::NotTransitive);
}

TEST_CASE("primitivity and quasiprimitivity agree with brute-force oracles")
{
  for (auto const &g : small_transitive_corpus()) {
    CAPTURE(g.order());
    CAPTURE(g.degree());
    auto gens = gens_of(g);
    bool prim = oracle::count_block_systems(gens, g.degree()) == 0;
    CHECK(is_primitive(g) == prim);

    auto mins = oracle::minimal_normals(gens, g.degree());
    bool qp = std::all_of(mins.begin(), mins.end(), [&](auto const &m) { return oracle::transitive(m, g.degree()); });
    bool it = std::any_of(mins.begin(), mins.end(), [&](auto const &m) { return oracle::transitive(m, g.degree()); });
    auto p = profile(g);
    CHECK(p.quasiprimitive == qp);
    CHECK(p.innately_transitive == it);
    if (!qp)
      CHECK(error_of([&] { qp_type(g); }) == ErrorCode::NotQuasiprimitive);
  }
}

TEST_CASE("random transitive groups of degree at most 8")
{
  std::mt19937_64 rng(7);
  std::size_t tested = 0;
  while (tested < 40) {
    std::size_t n = 4 + rng() % 5;
    PermGroup g(n, {oracle::random_sparse_perm(n, 2 + rng() % (n - 1), rng),
                    oracle::random_sparse_perm(n, 2 + rng() % (n - 1), rng)});
    if (!is_transitive(g))
      continue;
    ++tested;
    auto gens = gens_of(g);
    CHECK(is_primitive(g) == (oracle::count_block_systems(gens, n) == 0));
    auto mins = oracle::minimal_normals(gens, n);
    bool qp = std::all_of(mins.begin(), mins.end(), [&](auto const &m) { return oracle::transitive(m, n); });
    CHECK(profile(g).quasiprimitive == qp);
  }
}

TEST_CASE("type invariants")
{
  std::vector<PermGroup> qp_corpus;
  for (auto const &g : small_transitive_corpus())
    if (profile(g).quasiprimitive)
      qp_corpus.push_back(g);
  qp_corpus.push_back(named_group("SD_A5"));
  qp_corpus.push_back(hs_group(alternating_group(5)));
  qp_corpus.push_back(regular_representation(alternating_group(5)).right);
  qp_corpus.push_back(wreath_product({alternating_group(5), symmetric_group(2)}).group);
  CHECK(qp_corpus.size() >= 12);
  for (auto const &g : qp_corpus) {
    auto t = qp_type(g);
    CAPTURE(to_string(t.tag));
    CHECK(t.primitive_variant.has_value() == is_primitive(g));
    if (t.primitive_variant)
      CHECK(*t.primitive_variant == t.tag);
    if (t.tag == QPTag::HA || t.tag == QPTag::HS || t.tag == QPTag::HC)
      CHECK(is_primitive(g));
    if (t.tag == QPTag::HA)
      CHECK(is_regular(socle(g)));
  }
}

TEST_CASE("a Tw socle is regular with trivial centralizer")
{
  auto cg = product_cells(regular_representation(alternating_group(5)).right, 2);
  REQUIRE(qp_type(cg).tag == QPTag::Tw);
  auto s = socle(cg.group());
  CHECK(s.order() == cg.decomposition().degree());
  CHECK(cg.transitive_on_points(s));
  CHECK(centralizer_in(cg.group(), s).is_trivial());
}

TEST_CASE("primitive names")
{
  CHECK(primitive_name(QPTag::Sd) == "SD");
  CHECK(primitive_name(QPTag::Cd) == "CD");
  CHECK(primitive_name(QPTag::Pa) == "PA");
  CHECK(primitive_name(QPTag::As) == "AS");
  CHECK(primitive_name(QPTag::Tw) == "TW");
  CHECK(to_string(QPTag::HC) == "HC");
}

TEST_CASE("diagonal quotient check")
{
  auto dq = example_diagonal_quotient(alternating_group(5), 1, 2);
  CellGroup cg(dq.group, dq.decomposition);
  auto d = diagonal_quotient_check(cg);
  REQUIRE(d.evidence.has_value());
  CHECK(d.evidence->k == 2);
  CHECK(d.evidence->m == 2);
  CHECK(d.evidence->centralizer.order() == 60);
  CHECK(d.evidence->sym_centralizer.order() == 3600);
  CHECK(same_group(d.evidence->m1, dq.m1_power));
  CHECK(same_group(d.evidence->centralizer, dq.n1_diagonal));

  auto neg = diagonal_quotient_check(wreath_product({alternating_group(5), symmetric_group(2)}).group);
  CHECK_FALSE(neg.evidence.has_value());
  CHECK_FALSE(neg.reason.empty());
  // Regular T^2 with trivial centralizer: not subdirect.
  auto tw = diagonal_quotient_check(product_cells(regular_representation(alternating_group(5)).right, 2));
  CHECK_FALSE(tw.evidence.has_value());
  // C_G(M1) = C_Sym(M1) is not proper.
  auto hc = diagonal_quotient_check(hs_group(alternating_group(5)));
  CHECK_FALSE(hc.evidence.has_value());
}
