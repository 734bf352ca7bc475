#include "doctest.h"

#include <random>

#include "cdecomp/constructions.hpp"
#include "cdecomp/error.hpp"
#include "cdecomp/structure.hpp"
#include "oracles.hpp"

using namespace cdecomp;
using oracle::P;

namespace
{

PermGroup group(std::size_t n, std::vector<std::string> const &cycles)
{
  std::vector<Perm> gens;
  for (auto const &c : cycles)
    gens.push_back(P(n, c));
  return PermGroup(n, gens);
}

std::vector<Perm> gens_of(PermGroup const &g)
{ return {g.generators().begin(), g.generators().end()}; }

// A5 x A5 on 10 points (left factor on 0..4, right on 5..9) and the swap.
PermGroup a5_left()
{ return group(10, {"(0 1 2)", "(0 1 2 3 4)"}); }

PermGroup a5_right()
{ return group(10, {"(5 6 7)", "(5 6 7 8 9)"}); }

PermGroup a5_squared()
{ return group(10, {"(0 1 2)", "(0 1 2 3 4)", "(5 6 7)", "(5 6 7 8 9)"}); }

PermGroup a5_squared_swap()
{ return group(10, {"(0 1 2)", "(0 1 2 3 4)", "(0 5)(1 6)(2 7)(3 8)(4 9)"}); }

std::vector<oracle::ElementSet> oracle_minimal_normals(PermGroup const &g)
{ return oracle::minimal_normals(gens_of(g), g.degree()); }

oracle::ElementSet as_set(PermGroup const &h)
{ return oracle::closure(gens_of(h), h.degree()); }

} // namespace

TEST_CASE("normal closure in S4")
{
  auto s4 = symmetric_group(4);
  std::vector<Perm> v{P(4, "(0 1)(2 3)")};
  CHECK(normal_closure(s4, v).order() == 4);
  std::vector<Perm> c{P(4, "(0 1 2)")};
  CHECK(normal_closure(s4, c).order() == 12);
  std::vector<Perm> e{Perm(4)};
  CHECK(normal_closure(s4, e).is_trivial());
}

TEST_CASE("is_normal")
{
  auto s4 = symmetric_group(4);
  CHECK(is_normal(s4, alternating_group(4)));
  auto s3 = symmetric_group(3);
  CHECK_FALSE(is_normal(s3, group(3, {"(0 1)"})));
  CHECK(is_normal(s3, PermGroup(3)));
  try {
    (void)is_normal(alternating_group(4), group(4, {"(0 1)"}));
    FAIL("expected NotSubgroup");
  } catch (Error const &e) {
    CHECK(e.code() == ErrorCode::NotSubgroup);
  }
}

TEST_CASE("minimal normal subgroups of small groups")
{
  auto a5 = alternating_group(5);
  auto r = minimal_normal_subgroups(a5);
  REQUIRE(r.size() == 1);
  CHECK(r[0].subgroup.order() == 60);
  CHECK(r[0].is_transitive);
  CHECK_FALSE(r[0].is_abelian);

  auto s3 = minimal_normal_subgroups(symmetric_group(3));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].subgroup.order() == 3);
  CHECK(s3[0].is_abelian);

  try {
    (void)minimal_normal_subgroups(PermGroup(4));
    FAIL("expected TrivialGroup");
  } catch (Error const &e) {
    CHECK(e.code() == ErrorCode::TrivialGroup);
  }
}

TEST_CASE("C3 wr D8 has exactly the three listed minimal normal subgroups")
{
  auto ex = example_c3_wr_d8();
  CHECK(ex.wreath.group.order() == 81 * 8);
  auto r = minimal_normal_subgroups(ex.wreath.group);
  REQUIRE(r.size() == 3);
  std::vector<PermGroup> expected{ex.m1, ex.m2, ex.m3};
  for (auto const &want : expected) {
    bool found = std::any_of(r.begin(), r.end(), [&](auto const &rec) { return same_group(rec.subgroup, want); });
    CHECK(found);
  }
}

TEST_CASE("minimal normal subgroups agree with the brute-force scan")
{
  std::vector<PermGroup> corpus{symmetric_group(4), dihedral_group(6), alternating_group(4), a5_squared_swap(),
                                affine_line_group(7), group(6, {"(0 1)", "(2 3)", "(4 5)"}),
                                example_c3_wr_d8().wreath.group};
  for (auto const &g : corpus) {
    auto got = minimal_normal_subgroups(g);
    auto want = oracle_minimal_normals(g);
    CHECK(got.size() == want.size());
    for (auto const &rec : got) {
      auto s = as_set(rec.subgroup);
      CHECK(std::any_of(want.begin(), want.end(), [&](auto const &w) { return w == s; }));
      CHECK(is_normal(g, rec.subgroup));
      CHECK(rec.is_abelian == is_abelian(rec.subgroup));
    }
  }
}

TEST_CASE("socle")
{
  CHECK(socle(symmetric_group(4)).order() == 4);
  auto s = socle(a5_squared_swap());
  CHECK(s.order() == 3600);
  CHECK(socle(alternating_group(5)).order() == 60);
  auto g = example_c3_wr_d8().wreath.group;
  auto soc = socle(g);
  CHECK(is_normal(g, soc));
  for (auto const &rec : minimal_normal_subgroups(g))
    CHECK(soc.contains(rec.subgroup));
}

TEST_CASE("is_simple")
{
  CHECK(is_simple(alternating_group(5)));
  CHECK(is_simple(psl2_7()));
  CHECK(is_simple(cyclic_group(7)));
  CHECK_FALSE(is_simple(symmetric_group(5)));
  CHECK_FALSE(is_simple(a5_squared()));
}

TEST_CASE("centralizers")
{
  auto s3 = symmetric_group(3);
  auto a3 = alternating_group(3);
  CHECK(same_group(centralizer_in(s3, a3), a3));
  auto c6 = cyclic_group(6);
  CHECK(same_group(centralizer_in(c6, c6), c6));

  // A5 x A5 in product action on 25 points: the left factor centralizes the right.
  auto a5 = alternating_group(5);
  std::vector<Perm> id{Perm(5), Perm(5)};
  auto coord = [&](Perm const &x, std::size_t i) {
    auto b = id;
    b[i] = x;
    return product_action_perm(b, Perm(2), 5);
  };
  std::vector<Perm> left, right, both;
  for (auto const &s : a5.generators()) {
    left.push_back(coord(s, 0));
    right.push_back(coord(s, 1));
  }
  both = left;
  both.insert(both.end(), right.begin(), right.end());
  PermGroup g(25, both), l(25, left), r(25, right);
  CHECK(same_group(centralizer_in(g, l), r));
}

TEST_CASE("centralizer_in agrees with element filtering")
{
  std::mt19937_64 rng(7);
  std::vector<PermGroup> parents{symmetric_group(5), example_c3_wr_d8().wreath.group, affine_line_group(11),
                                 a5_squared_swap()};
  for (auto const &g : parents) {
    auto elems = oracle::closure(gens_of(g), g.degree());
    std::vector<Perm> pool(elems.begin(), elems.end());
    std::sort(pool.begin(), pool.end());
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Perm> mg{pool[rng() % pool.size()], pool[rng() % pool.size()]};
      PermGroup m(g.degree(), mg);
      auto want = oracle::filter(elems, [&](Perm const &x) { return oracle::commutes_with_all(x, mg); });
      auto got = centralizer_in(g, m);
      CHECK(got.order() == want.size());
      for (auto const &x : want)
        CHECK(got.contains(x));
    }
  }
}

TEST_CASE("centralizer in Sym of a regular group")
{
  auto c4 = cyclic_group(4);
  CHECK(same_group(centralizer_in_sym_of_regular(c4), c4));

  auto rr = regular_representation(symmetric_group(3));
  auto c = centralizer_in_sym_of_regular(rr.right);
  CHECK(c.order() == 6);
  CHECK(is_regular(c));
  auto sym6 = oracle::closure(gens_of(symmetric_group(6)), 6);
  auto mg = gens_of(rr.right);
  auto want = oracle::filter(sym6, [&](Perm const &x) { return oracle::commutes_with_all(x, mg); });
  CHECK(want.size() == 6);
  for (auto const &x : want)
    CHECK(c.contains(x));
  CHECK(same_group(c, rr.left));
  CHECK(intersection(c, rr.right).is_trivial());

  auto r60 = regular_representation(alternating_group(5));
  auto c60 = centralizer_in_sym_of_regular(r60.right);
  CHECK(c60.order() == 60);
  CHECK(is_regular(c60));
  CHECK(intersection(c60, r60.right).is_trivial());
  for (auto const &x : c60.generators())
    CHECK(oracle::commutes_with_all(x, gens_of(r60.right)));

  try {
    (void)centralizer_in_sym_of_regular(symmetric_group(3));
    FAIL("expected NotRegular");
  } catch (Error const &e) {
    CHECK(e.code() == ErrorCode::NotRegular);
  }
}

TEST_CASE("centralizer of a transitive group is semiregular")
{
  auto g = group(6, {"(0 1 2 3 4 5)", "(0 3)(1 4)(2 5)"});
  auto c = centralizer_in_sym_of_transitive(g);
  CHECK(is_semiregular(c));
  for (auto const &x : c.generators())
    CHECK(oracle::commutes_with_all(x, gens_of(g)));
  auto sym6 = oracle::closure(gens_of(symmetric_group(6)), 6);
  auto mg = gens_of(g);
  CHECK(c.order() == oracle::filter(sym6, [&](Perm const &x) { return oracle::commutes_with_all(x, mg); }).size());
}

TEST_CASE("simple direct factors")
{
  auto f = simple_direct_factors(a5_squared());
  REQUIRE(f.factors.size() == 2);
  for (auto const &x : f.factors) {
    CHECK(x.order() == 60);
    CHECK(is_simple(x));
  }
  CHECK(intersection(f.factors[0], f.factors[1]).is_trivial());
  for (auto const &a : f.factors[0].generators())
    CHECK(oracle::commutes_with_all(a, gens_of(f.factors[1])));

  auto one = simple_direct_factors(alternating_group(5));
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0].order() == 60);

  try {
    (void)simple_direct_factors(group(6, {"(0 1 2)", "(3 4 5)"}));
    FAIL("expected AbelianFactorization");
  } catch (Error const &e) {
    CHECK(e.code() == ErrorCode::AbelianFactorization);
  }
}

TEST_CASE("projection and subdirect subgroups")
{
  auto fact = simple_direct_factors(a5_squared());
  std::size_t left = fact.factors[0].contains(P(10, "(0 1 2)")) ? 0 : 1;
  Perm g = P(10, "(0 1 2)"), h = P(10, "(5 6)(7 8)");
  CHECK(project_to_factor(g * h, fact, left) == g);
  CHECK(project_to_factor(g * h, fact, 1 - left) == h);
  CHECK(project_to_factor(Perm(10), fact, 0).is_identity());

  // The diagonal {(g, g)}.
  PermGroup diag(10, {P(10, "(0 1 2)(5 6 7)"), P(10, "(0 1 2 3 4)(5 6 7 8 9)")});
  CHECK(project_to_factor(diag, fact, 0).order() == 60);
  CHECK(is_subdirect(diag, fact));
  CHECK_FALSE(is_subdirect(a5_left(), fact));

  try {
    (void)project_to_factor(P(10, "(0 5)"), fact, 0);
    FAIL("expected NotInProduct");
  } catch (Error const &e) {
    CHECK(e.code() == ErrorCode::NotInProduct);
  }
}

TEST_CASE("point stabilizer of A5 x A5 on A5 is the diagonal, hence subdirect")
{
  auto rr = regular_representation(alternating_group(5));
  auto gens = gens_of(rr.right);
  for (auto const &s : rr.left.generators())
    gens.push_back(s);
  PermGroup g(60, gens);
  CHECK(g.order() == 3600);
  auto fact = simple_direct_factors(g);
  REQUIRE(fact.factors.size() == 2);
  auto stab = point_stabilizer(g, 0);
  CHECK(stab.order() == 60);
  CHECK(is_subdirect(stab, fact));
}

TEST_CASE("is_subdirect on diagonals of small simple groups")
{
  for (auto const &t : {alternating_group(5), psl2_7(), alternating_group(6)}) {
    std::size_t n = t.degree();
    std::vector<PermGroup> two{t, t};
    auto prod = direct_product(two);
    auto fact = simple_direct_factors(prod);
    std::vector<Perm> dg;
    for (auto const &s : t.generators()) {
      std::vector<Point> img(2 * n);
      for (Point x = 0; x < n; ++x) {
        img[x] = s[x];
        img[n + x] = static_cast<Point>(n + s[x]);
      }
      dg.push_back(Perm(std::move(img)));
    }
    CHECK(is_subdirect(PermGroup(2 * n, dg), fact));
    CHECK_FALSE(is_subdirect(fact.factors[0], fact));
  }
}

TEST_CASE("minimal normal subgroup invariants on random groups")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 5 + rng() % 3;
    std::vector<Perm> gens{oracle::random_sparse_perm(n, 3 + rng() % 3, rng),
                           oracle::random_sparse_perm(n, 2 + rng() % 3, rng)};
    PermGroup g(n, gens);
    if (g.is_trivial())
      continue;
    auto recs = minimal_normal_subgroups(g);
    REQUIRE_FALSE(recs.empty());
    for (auto const &r : recs) {
      CHECK(is_normal(g, r.subgroup));
      CHECK_FALSE(r.subgroup.is_trivial());
      for (auto const &other : recs)
        if (other.subgroup.order() < r.subgroup.order())
          CHECK_FALSE(r.subgroup.contains(other.subgroup));
    }
    CHECK(recs.size() == oracle_minimal_normals(g).size());
  }
}
