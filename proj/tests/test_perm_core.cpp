#include "doctest.h"

#include <set>

#include "cdecomp/error.hpp"
#include "cdecomp/perm_group.hpp"
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

// Every set partition of {0..n-1}, via restricted growth strings.
std::vector<Partition> all_partitions(std::size_t n)
{
  std::vector<Partition> res;
  std::vector<std::size_t> labels(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_label) {
    if (i == n) {
      res.push_back(Partition::from_labels(labels));
      return;
    }
    for (std::size_t l = 0; l <= max_label + 1; ++l) {
      labels[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  labels[0] = 0;
  rec(1, 0);
  return res;
}

bool refines(Partition const &fine, Partition const &coarse)
{
  for (auto const &c : fine.cells()) {
    auto target = coarse.cell_of(c.front());
    for (Point x : c)
      if (coarse.cell_of(x) != target)
        return false;
  }
  return true;
}

std::vector<PermGroup> random_small_groups(std::size_t count, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<PermGroup> res;
  while (res.size() < count) {
    std::size_t n = 4 + rng() % 6;
    std::size_t k = 1 + rng() % 3;
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i)
      gens.push_back(oracle::random_sparse_perm(n, 2 + rng() % (n - 1), rng));
    try {
      oracle::closure(gens, n, 10'000);
    } catch (std::runtime_error const &) {
      continue;
    }
    res.emplace_back(n, gens);
  }
  return res;
}

} // namespace

TEST_CASE("compose uses the right action")
{
  auto a = P(3, "(0 1)");
  auto b = P(3, "(1 2)");
  auto ab = compose(a, b);
  CHECK(std::vector<Point>(ab.images().begin(), ab.images().end()) == std::vector<Point>{2, 0, 1});
  CHECK(ab == P(3, "(0 2 1)"));

  auto g = P(5, "(0 3 4)(1 2)");
  CHECK(compose(Perm(5), g) == g);
  CHECK(compose(g, g.inverse()).is_identity());
  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), Error);
}

TEST_CASE("cycle notation parsing")
{
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles("  ( 0 1 2 ) ( 3 )", 4) == P(4, "(0 1 2)"));
  CHECK(parse_cycles("(0,1)(2,3)", 4).to_cycle_string() == "(0 1)(2 3)");
  CHECK_THROWS_AS(parse_cycles("(0 1", 4), Error);
  CHECK_THROWS_AS(parse_cycles("(0 4)", 4), Error);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 4), Error);
  CHECK_THROWS_AS(parse_cycles("0 1", 4), Error);
}

TEST_CASE("composition is associative and has inverses")
{
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 12;
    auto a = oracle::random_perm(n, rng);
    auto b = oracle::random_perm(n, rng);
    auto c = oracle::random_perm(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.conjugate(b) == b.inverse() * a * b);
    CHECK(a.pow(static_cast<std::int64_t>(a.order())).is_identity());
  }
}

TEST_CASE("orbits")
{
  CHECK(orbit(group(3, {"(0 1 2)"}), 0) == std::vector<Point>{0, 1, 2});
  CHECK(orbit(group(3, {"(0 1)"}), 2) == std::vector<Point>{2});
  CHECK(orbit(group(4, {"(0 1)", "(2 3)"}), 0) == std::vector<Point>{0, 1});
}

TEST_CASE("order and membership")
{
  CHECK(group(3, {"(0 1)", "(0 1 2)"}).order() == 6);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK(group(4, {"(0 1 2 3)", "(0 1)"}).order() == 24);

  auto c3 = group(3, {"(0 1 2)"});
  CHECK(c3.contains(P(3, "(0 2 1)")));
  CHECK_FALSE(c3.contains(P(3, "(0 1)")));
  CHECK(c3.contains(Perm(3)));
  CHECK_THROWS_AS(c3.contains(Perm(4)), Error);
}

TEST_CASE("point stabilizers")
{
  auto s3 = group(3, {"(0 1)", "(0 1 2)"});
  auto st = point_stabilizer(s3, 2);
  CHECK(st.order() == 2);
  CHECK(st.contains(P(3, "(0 1)")));

  CHECK(point_stabilizer(group(4, {"(0 1 2 3)"}), 1).order() == 1);
  CHECK(point_stabilizer(group(5, {"(0 1 2 3 4)", "(0 1 2)"}), 4).order() == 12);
}

TEST_CASE("setwise stabilizers")
{
  auto s4 = group(4, {"(0 1 2 3)", "(0 1)"});
  Point s01[] = {0, 1};
  auto st = setwise_stabilizer(s4, s01);
  CHECK(st.order() == 4);
  CHECK(st.contains(P(4, "(0 1)")));
  CHECK(st.contains(P(4, "(2 3)")));

  Point all[] = {0, 1, 2, 3};
  CHECK(same_group(setwise_stabilizer(s4, all), s4));
  Point single[] = {2};
  CHECK(same_group(setwise_stabilizer(s4, single), point_stabilizer(s4, 2)));
}

TEST_CASE("setwise stabilizer backtrack path on a large group")
{
  // S9 has order 362880 > 10^5, so the backtrack branch runs.
  auto s9 = group(9, {"(0 1 2 3 4 5 6 7 8)", "(0 1)"});
  Point set[] = {1, 4, 7};
  auto st = setwise_stabilizer(s9, set);
  CHECK(st.order() == 6 * 720);
  CHECK(st.contains(P(9, "(1 4 7)(0 2)")));
  CHECK_FALSE(st.contains(P(9, "(1 2)")));
}

TEST_CASE("transitivity and regularity")
{
  auto c4 = group(4, {"(0 1 2 3)"});
  CHECK(is_transitive(c4));
  CHECK(is_regular(c4));

  auto v = group(4, {"(0 1)(2 3)"});
  CHECK_FALSE(is_transitive(v));
  CHECK(is_semiregular(v));

  auto s3 = group(3, {"(0 1)", "(0 1 2)"});
  CHECK(is_transitive(s3));
  CHECK_FALSE(is_regular(s3));
  CHECK_FALSE(is_semiregular(s3));
}

TEST_CASE("minimal block systems")
{
  auto c4 = minimal_block_systems(group(4, {"(0 1 2 3)"}));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0] == Partition(4, {{0, 2}, {1, 3}}));

  CHECK(minimal_block_systems(group(5, {"(0 1 2 3 4)", "(0 1 2)"})).empty());

  auto wr = minimal_block_systems(group(6, {"(0 1 2)", "(0 1)", "(0 3)(1 4)(2 5)"}));
  REQUIRE(wr.size() == 1);
  CHECK(wr[0] == Partition(6, {{0, 1, 2}, {3, 4, 5}}));

  CHECK_THROWS_AS(minimal_block_systems(group(4, {"(0 1)"})), Error);
}

TEST_CASE("block systems agree with brute-force partition enumeration")
{
  std::vector<PermGroup> groups = {
    group(6, {"(0 1 2 3 4 5)"}),
    group(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}),
    group(8, {"(0 1 2 3 4 5 6 7)"}),
    group(6, {"(0 1 2)", "(0 3)(1 4)(2 5)"}),
    group(8, {"(0 1)(2 3)(4 5)(6 7)", "(0 2)(1 3)(4 6)(5 7)", "(0 4)(1 5)(2 6)(3 7)"}),
  };
  for (auto const &g : groups) {
    std::vector<Partition> invariant;
    for (auto const &p : all_partitions(g.degree())) {
      bool ok = p.size() > 1 && p.size() < g.degree();
      for (auto const &s : g.generators())
        ok = ok && p.preserved_by(s);
      if (ok)
        invariant.push_back(p);
    }
    std::vector<Partition> minimal;
    for (auto const &p : invariant) {
      bool is_min = std::none_of(invariant.begin(), invariant.end(), [&](Partition const &q) {
        return q != p && refines(q, p);
      });
      if (is_min)
        minimal.push_back(p);
    }
    std::sort(invariant.begin(), invariant.end());
    std::sort(minimal.begin(), minimal.end());
    CHECK(all_block_systems(g) == invariant);
    CHECK(minimal_block_systems(g) == minimal);
  }
}

TEST_CASE("kernel invariants on random groups")
{
  auto groups = random_small_groups(30, 11);
  std::mt19937_64 rng(5);
  for (auto const &g : groups) {
    std::vector<Perm> gens(g.generators().begin(), g.generators().end());
    auto elems = oracle::closure(gens, g.degree());
    CHECK(g.order() == elems.size());

    for (Point p = 0; p < g.degree(); ++p)
      CHECK(orbit(g, p).size() * point_stabilizer(g, p).order() == g.order());

    for (int t = 0; t < 20; ++t) {
      auto x = oracle::random_perm(g.degree(), rng);
      CHECK(g.contains(x) == elems.contains(x));
    }
    for (auto const &x : elems)
      CHECK(g.contains(x));

    std::vector<Point> set;
    for (Point p = 0; p < g.degree(); ++p)
      if (rng() % 2)
        set.push_back(p);
    auto st = setwise_stabilizer(g, set);
    auto expected = oracle::filter(elems, [&](Perm const &x) {
      return std::all_of(set.begin(), set.end(), [&](Point p) {
        return std::find(set.begin(), set.end(), x[p]) != set.end();
      });
    });
    CHECK(st.order() == expected.size());
    for (auto const &x : expected)
      CHECK(st.contains(x));
  }
}

TEST_CASE("elements enumerates each element once")
{
  auto g = group(5, {"(0 1 2 3 4)", "(0 1)"});
  auto elems = g.elements();
  std::set<Perm> distinct(elems.begin(), elems.end());
  CHECK(elems.size() == 120);
  CHECK(distinct.size() == 120);
  CHECK_THROWS_AS(g.elements(100), Error);
}

TEST_CASE("action stabilizers and kernels")
{
  // S4 acting on the three pair-partitions of {0..3}; kernel is V4.
  auto s4 = group(4, {"(0 1 2 3)", "(0 1)"});
  std::vector<Partition> pairs = {Partition(4, {{0, 1}, {2, 3}}), Partition(4, {{0, 2}, {1, 3}}),
                                  Partition(4, {{0, 3}, {1, 2}})};
  std::vector<Perm> act;
  for (auto const &s : s4.generators()) {
    std::vector<Point> img;
    for (auto const &p : pairs)
      img.push_back(static_cast<Point>(std::find(pairs.begin(), pairs.end(), p.image(s)) - pairs.begin()));
    act.emplace_back(img);
  }
  Point all[] = {0, 1, 2};
  auto kernel = action_stabilizer(s4, act, 3, all);
  CHECK(kernel.order() == 4);
  CHECK(kernel.contains(P(4, "(0 1)(2 3)")));
  Point first[] = {0};
  CHECK(action_stabilizer(s4, act, 3, first).order() == 8);
  CHECK(action_image(act, 3).order() == 6);
}
