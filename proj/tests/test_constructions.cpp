#include "doctest.h"

#include "cdecomp/constructions.hpp"
#include "cdecomp/error.hpp"
#include "cdecomp/structure.hpp"
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

// Normalizer of m in Sym(n) by filtering all of Sym(n).
std::size_t oracle_sym_normalizer_order(PermGroup const &m)
{
  std::size_t n = m.degree();
  auto members = oracle::closure(gens_of(m), n);
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i)
    img[i] = i;
  std::size_t count = 0;
  do {
    Perm x(img);
    bool ok = std::all_of(m.generators().begin(), m.generators().end(),
                          [&](Perm const &s) { return members.contains(s.conjugate(x)); });
    count += ok;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

PermGroup q8_regular()
{
  PermGroup q8(8, {P(8, "(0 1 3 6)(2 5 7 4)"), P(8, "(0 2 3 7)(1 4 6 5)")});
  return regular_representation(q8).right;
}

} // namespace

TEST_CASE("basic families")
{
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(6).order() == 360);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(psl2_7().order() == 168);
  CHECK(is_simple(psl2_7()));
  CHECK(affine_line_group(7).order() == 42);
  CHECK(error_of([] { (void)affine_line_group(8); }) == ErrorCode::InvalidSpec);
  CHECK(q8_regular().order() == 8);
  CHECK(is_regular(q8_regular()));
}

TEST_CASE("regular representation")
{
  auto rr = regular_representation(symmetric_group(3));
  CHECK(rr.elements[0].is_identity());
  CHECK(is_regular(rr.right));
  CHECK(is_regular(rr.left));
  for (auto const &a : rr.right.generators())
    CHECK(oracle::commutes_with_all(a, gens_of(rr.left)));
  for (auto const &x : rr.elements)
    CHECK(rr.right_mult(x)[0] == rr.point_of(x));
  Perm t = P(3, "(0 1)");
  CHECK(rr.conjugation(t)[0] == 0);
  CHECK(rr.right.contains(rr.right_mult(t)));
}

TEST_CASE("wreath products")
{
  auto w = wreath_product({symmetric_group(3), symmetric_group(2), WreathAction::Product});
  CHECK(w.group.degree() == 9);
  CHECK(w.group.order() == 72);
  CHECK(w.base.order() == 36);
  REQUIRE(w.decomposition);
  Partition rows(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}), cols(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  CHECK(*w.decomposition == validate({rows, cols}));

  auto direct = wreath_product({symmetric_group(3), PermGroup(2), WreathAction::Product});
  CHECK(direct.group.order() == 36);
  CHECK_FALSE(is_transitive_on(direct.group, *direct.decomposition));

  auto a5 = wreath_product({alternating_group(5), symmetric_group(2), WreathAction::Product});
  CHECK(a5.group.degree() == 25);
  CHECK(a5.group.order() == 7200);

  auto imp = wreath_product({symmetric_group(3), symmetric_group(2), WreathAction::Imprimitive});
  CHECK(imp.group.degree() == 6);
  CHECK(imp.group.order() == 72);
  REQUIRE(imp.blocks);
  for (auto const &x : imp.group.generators())
    CHECK(imp.blocks->preserved_by(x));

  CHECK(error_of([] { (void)wreath_product({symmetric_group(3), PermGroup(1), WreathAction::Product}); }) ==
        ErrorCode::InvalidSpec);
}

TEST_CASE("wreath product invariants over a small corpus")
{
  std::vector<PermGroup> bases{symmetric_group(3), cyclic_group(4), alternating_group(4), dihedral_group(5)};
  std::vector<PermGroup> tops{symmetric_group(2), cyclic_group(3), symmetric_group(3)};
  for (auto const &l : bases)
    for (auto const &h : tops) {
      auto w = wreath_product({l, h, WreathAction::Product});
      std::uint64_t want = h.order();
      for (std::size_t i = 0; i < h.degree(); ++i)
        want *= l.order();
      CHECK(w.group.order() == want);
      CHECK(is_invariant(w.group, *w.decomposition));
      CHECK(is_transitive_on(w.group, *w.decomposition));
      for (auto const &x : w.group.generators())
        CHECK(from_cells(*w.decomposition, to_cells(*w.decomposition, x)) == x);
    }
}

TEST_CASE("holomorphs")
{
  CHECK(holomorph(cyclic_group(3)).order() == 6);
  CHECK(holomorph(cyclic_group(2)).order() == 2);
  auto v4 = named_group("V4");
  auto h = holomorph(v4);
  CHECK(h.order() == 24);
  CHECK(same_group(h, symmetric_group(4)));
  CHECK(error_of([] { (void)holomorph(symmetric_group(3)); }) == ErrorCode::NotRegular);
  CHECK(error_of([] { (void)holomorph(cyclic_group(20), 10); }) == ErrorCode::LimitExceeded);
}

TEST_CASE("holomorph equals the normalizer in Sym (filter oracle up to degree 8)")
{
  std::vector<PermGroup> regular{cyclic_group(4), cyclic_group(5), cyclic_group(6), named_group("V4"),
                                 regular_representation(symmetric_group(3)).right, cyclic_group(8),
                                 regular_representation(dihedral_group(4)).right, q8_regular(),
                                 named_group("REG_C7")};
  for (auto const &m : regular) {
    auto h = holomorph(m);
    CHECK(h.order() == oracle_sym_normalizer_order(m));
    CHECK(is_normal(h, m));
  }
}

TEST_CASE("holomorph orders at degrees 9 to 12 match automorphism group orders")
{
  // |Hol M| = |M| |Aut M| with Aut orders: C9 6, C3^2 48, C10 4, D10 20,
  // C12 4, A4 24, D12 12.
  struct Case
  {
    PermGroup m;
    std::uint64_t aut;
  };
  std::vector<PermGroup> c3{cyclic_group(3), cyclic_group(3)};
  std::vector<Case> cases{{cyclic_group(9), 6},
                          {regular_representation(direct_product(c3)).right, 48},
                          {cyclic_group(10), 4},
                          {regular_representation(dihedral_group(5)).right, 20},
                          {cyclic_group(12), 4},
                          {regular_representation(alternating_group(4)).right, 24},
                          {regular_representation(dihedral_group(6)).right, 12}};
  for (auto const &c : cases) {
    auto h = holomorph(c.m);
    CHECK(h.order() == c.m.order() * c.aut);
    CHECK(is_normal(h, c.m));
    CHECK(point_stabilizer(h, 0).order() == c.aut);
  }
}

TEST_CASE("diagonal embeddings")
{
  auto d = diagonal_embed(symmetric_group(3), 2);
  CHECK(d.degree() == 9);
  CHECK(d.order() == 6);
  CHECK(diagonal_embed(PermGroup(3), 2).is_trivial());

  auto ex = example_diagonal_quotient(alternating_group(5), 1, 2);
  auto hd = diagonal_embed(ex.h, 2);
  CHECK(hd.degree() == 3600);
  CHECK(hd.order() == 3600);

  // The centralizer of the diagonal in H^2 is Z(H)^2; it meets the diagonal
  // in the diagonal of Z(H).
  for (auto const &[hgrp, zorder] : std::vector<std::pair<PermGroup, std::uint64_t>>{
           {symmetric_group(3), 1}, {dihedral_group(4), 2}, {cyclic_group(3), 3}}) {
    auto w = wreath_product({hgrp, PermGroup(2), WreathAction::Product});
    auto diag = diagonal_embed(hgrp, 2);
    auto c = centralizer_in(w.base, diag);
    CHECK(c.order() == zorder * zorder);
    CHECK(intersection(c, diag).order() == zorder);
  }
}

TEST_CASE("C3 wr D8 example")
{
  auto ex = example_c3_wr_d8();
  CHECK(ex.wreath.group.degree() == 81);
  CHECK(ex.wreath.group.order() == 648);
  auto const &e = *ex.wreath.decomposition;
  for (auto const *m : {&ex.m1, &ex.m2, &ex.m3}) {
    CHECK(is_normal(ex.wreath.group, *m));
    for (std::size_t i = 0; i < e.index(); ++i)
      CHECK(same_group(component(*m, e, i), ex.h));
  }
  CHECK(ex.m3.order() == 9);
}

TEST_CASE("diagonal quotient example")
{
  auto ex = example_diagonal_quotient(alternating_group(5), 1, 2);
  CHECK(ex.group.degree() == 3600);
  CHECK(ex.m1_power.order() == 3600);
  CHECK(is_regular(ex.m1_power));
  CHECK(ex.n1_diagonal.order() == 60);
  CHECK(is_semiregular(ex.n1_diagonal));
  CHECK_FALSE(is_transitive(ex.n1_diagonal));
  CHECK(is_normal(ex.group, ex.m1_power));
  CHECK(is_normal(ex.group, ex.n1_diagonal));
  CHECK(ex.group.order() == 432000);
  auto c = component(ex.group, ex.decomposition, 0);
  CHECK(same_group(c, ex.h));
  CHECK(error_of([] { (void)example_diagonal_quotient(alternating_group(5), 1, 3); }) ==
        ErrorCode::LimitExceeded);
}

TEST_CASE("twisted wreath example")
{
  auto w = twisted_wreath(example_twisted_spec());
  CHECK(w.coset_count == 3);
  CHECK(w.decomposition.degree() == 216000);
  CHECK(w.cells.group().degree() == 180);
  CHECK(w.cells.group().order() == 60ull * 60 * 60 * 6);
  CHECK(w.socle.order() == 216000);
  CHECK(w.cells.transitive_on_points(w.socle));
  CHECK(is_normal(w.cells.group(), w.socle));
  CHECK(is_invariant(PermGroup(216000, w.point_generators), w.decomposition));

  auto c = component(w.cells, 0);
  CHECK(c.degree() == 60);
  CHECK(c.order() == 120);
  auto mins = minimal_normal_subgroups(c);
  bool regular_t = false, intransitive_c2 = false;
  for (auto const &r : mins) {
    regular_t |= r.subgroup.order() == 60 && is_regular(r.subgroup);
    intransitive_c2 |= r.subgroup.order() == 2 && !is_transitive(r.subgroup);
  }
  CHECK(regular_t);
  CHECK(intransitive_c2);
}

TEST_CASE("twisted wreath rejects invalid specifications")
{
  auto spec = example_twisted_spec();
  auto trivial = spec;
  trivial.phi = {Perm(60)};
  CHECK(error_of([&] { (void)twisted_wreath(trivial); }) == ErrorCode::InvalidSpec);

  auto normal_q = spec;
  normal_q.q = alternating_group(3);
  CHECK(error_of([&] { (void)twisted_wreath(normal_q); }) == ErrorCode::InvalidSpec);

  auto abelian = spec;
  abelian.t = cyclic_group(5);
  CHECK(error_of([&] { (void)twisted_wreath(abelian); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("named groups and the construct grammar")
{
  CHECK(named_group("S4").order() == 24);
  CHECK(named_group("D8").order() == 8);
  CHECK(named_group("AGL1_5").order() == 20);
  CHECK(named_group("PSL27").degree() == 8);
  auto sd = named_group("SD_A5");
  CHECK(sd.degree() == 60);
  CHECK(sd.order() == 7200);
  CHECK(is_regular(named_group("REG_S3")));
  CHECK(error_of([] { (void)named_group("X9"); }) == ErrorCode::InvalidSpec);

  auto c = construct("wreath", {{"base", "S3"}, {"top", "S2"}});
  CHECK(c.group.order() == 72);
  CHECK(c.decomposition.has_value());
  CHECK(construct("holomorph", {{"group", "V4"}}).group.order() == 24);
  CHECK(construct("example", {{"name", "c3d8"}}).group.order() == 648);
  CHECK(construct("group", {{"name", "A5"}}).group.order() == 60);
  CHECK(error_of([] { (void)construct("wreath", {{"base", "S3"}}); }) == ErrorCode::InvalidSpec);
  CHECK(error_of([] { (void)construct("wreath", {{"base", "S3"}, {"top", "S2"}, {"colour", "red"}}); }) ==
        ErrorCode::InvalidSpec);
  CHECK(error_of([] { (void)construct("nonsense", {}); }) == ErrorCode::InvalidSpec);
}
