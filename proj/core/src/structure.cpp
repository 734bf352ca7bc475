#include "cdecomp/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "cdecomp/error.hpp"

namespace cdecomp
{

namespace
{

constexpr std::uint64_t filter_order = 100'000;
constexpr std::uint64_t sweep_order = 1'000'000;
constexpr std::uint64_t descent_order = 20'000;
constexpr std::uint64_t sweep_cost = 50'000'000;   // elements times degree
constexpr int certify_attempts = 40;

bool enumerable(PermGroup const &g, std::uint64_t max_order = sweep_order)
{ return g.order() <= max_order && g.order() * g.degree() <= sweep_cost; }

PermGroup sorted_group(PermGroup g)
{
  g.prepare();
  return g;
}

std::uint64_t smallest_prime_factor(std::uint64_t n)
{
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return p;
  return n;
}

bool is_prime(std::uint64_t n)
{ return n >= 2 && smallest_prime_factor(n) == n; }

/// A random non-identity element of prime order (g non-trivial).
Perm random_prime_order_element(PermGroup const &g, std::mt19937_64 &rng)
{
  for (;;) {
    Perm x = g.random_element(rng);
    auto ord = x.order();
    if (ord == 1)
      continue;
    return x.pow(static_cast<std::int64_t>(ord / smallest_prime_factor(ord)));
  }
}

/// The subgroup generated by a list, reusing one chain while adding.
PermGroup generated(std::size_t degree, std::span<Perm const> elems)
{
  std::vector<Perm> gens;
  StabChain chain = StabChain::build(degree, {});
  for (auto const &x : elems) {
    if (x.is_identity() || chain.contains(x))
      continue;
    Perm one[] = {x};
    chain.add_generators(one);
    gens.push_back(x);
  }
  return PermGroup(degree, std::move(gens), std::move(chain));
}

/// Minimal normal subgroups of g contained in the normal subgroup k, by
/// sweeping g-classes of prime-order elements of k.
std::vector<PermGroup> minimal_normals_within(PermGroup const &g, PermGroup const &k)
{
  auto elems = k.elements(sweep_order);
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  index.reserve(elems.size() * 2);
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);

  std::vector<char> seen(elems.size(), 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    if (seen[i] || elems[i].is_identity())
      continue;
    seen[i] = 1;
    std::vector<std::uint32_t> cls{i};
    for (std::size_t c = 0; c < cls.size(); ++c) {
      for (auto const &s : g.generators()) {
        auto it = index.find(elems[cls[c]].conjugate(s));
        if (it == index.end())
          throw Error(ErrorCode::Precondition, "subgroup is not normal in the ambient group");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          cls.push_back(it->second);
        }
      }
    }
    if (is_prime(elems[i].order()))
      reps.push_back(i);
  }

  // Every minimal normal subgroup is the closure of one of its prime-order
  // elements; a closure is minimal iff no smaller closure lies inside it.
  std::vector<PermGroup> closures;
  for (auto r : reps) {
    Perm seed[] = {elems[r]};
    closures.push_back(normal_closure(g, seed));
  }
  std::stable_sort(closures.begin(), closures.end(),
                   [](PermGroup const &a, PermGroup const &b) { return a.order() < b.order(); });
  std::vector<PermGroup> res;
  for (auto &n : closures) {
    bool minimal = std::none_of(res.begin(), res.end(), [&](PermGroup const &m) { return n.contains(m); });
    if (minimal)
      res.push_back(std::move(n));
  }
  return res;
}

/// A minimal normal subgroup (preferably non-abelian) of a small normal
/// subgroup of n, found by shrinking the support of a random element.
std::optional<PermGroup> simple_factor_of(PermGroup const &n, std::mt19937_64 &rng)
{
  Perm z = random_prime_order_element(n, rng);
  for (int attempt = 0; attempt < certify_attempts; ++attempt) {
    for (int r = 0; r < 6; ++r) {
      Perm g = n.random_element(rng);
      Perm w = commutator(z, z.conjugate(g));
      if (!w.is_identity())
        z = std::move(w);
    }
    Perm seed[] = {z};
    auto l = normal_closure(n, seed);
    if (enumerable(l)) {
      auto mins = minimal_normals_within(l, l);
      auto it = std::find_if(mins.begin(), mins.end(), [](PermGroup const &t) { return !is_abelian(t); });
      return it != mins.end() ? *it : mins.front();
    }
  }
  return std::nullopt;
}

bool simple_small(PermGroup const &t)
{
  auto mins = minimal_normals_within(t, t);
  return mins.size() == 1 && mins[0].order() == t.order();
}

/// Conjugates of t under g, as distinct subgroups.
std::vector<PermGroup> conjugate_subgroups(PermGroup const &g, PermGroup const &t)
{
  std::vector<PermGroup> res{t};
  for (std::size_t i = 0; i < res.size(); ++i) {
    for (auto const &s : g.generators()) {
      std::vector<Perm> gens;
      for (auto const &x : res[i].generators())
        gens.push_back(x.conjugate(s));
      PermGroup c(g.degree(), std::move(gens));
      bool known = std::any_of(res.begin(), res.end(), [&](PermGroup const &r) { return r.contains(c); });
      if (!known) {
        if (res.size() > 64)
          throw Error(ErrorCode::LimitExceeded, "more than 64 conjugate simple factors");
        res.push_back(std::move(c));
      }
    }
  }
  return res;
}

bool commute(PermGroup const &a, PermGroup const &b)
{
  for (auto const &x : a.generators())
    for (auto const &y : b.generators())
      if (x * y != y * x)
        return false;
  return true;
}

/// One minimal normal subgroup of g inside the non-trivial normal subgroup k.
PermGroup find_minimal_normal_in(PermGroup const &g, PermGroup const &k, std::mt19937_64 &rng)
{
  PermGroup n = k;
  int failures = 0;
  while (true) {
    if (enumerable(n, descent_order))
      return minimal_normals_within(g, n).front();

    auto d = derived_subgroup(n);
    if (d.is_trivial()) {
      Perm seed[] = {random_prime_order_element(n, rng)};
      auto m = normal_closure(g, seed);
      if (m.order() < n.order()) {
        n = std::move(m);
        continue;
      }
      if (enumerable(n))
        return minimal_normals_within(g, n).front();
      throw Error(ErrorCode::LimitExceeded, "abelian normal subgroup of order " +
                                                std::to_string(n.order()) + " is too large to sweep");
    }
    if (d.order() < n.order()) {
      n = std::move(d);
      continue;
    }

    Perm seed[] = {random_prime_order_element(n, rng)};
    auto m = normal_closure(g, seed);
    if (m.order() < n.order()) {
      n = std::move(m);
      continue;
    }

    // n is perfect and the normal closure of a random element: try to
    // certify n = T^k with the conjugates of a simple factor T.
    auto t = simple_factor_of(n, rng);
    if (t) {
      auto conj = conjugate_subgroups(g, *t);
      bool direct = true;
      for (std::size_t i = 0; i < conj.size() && direct; ++i)
        for (std::size_t j = i + 1; j < conj.size() && direct; ++j)
          direct = commute(conj[i], conj[j]);
      if (direct && !is_abelian(*t) && simple_small(*t)) {
        std::uint64_t expected = 1;
        for (std::size_t i = 0; i < conj.size(); ++i)
          expected *= t->order();
        if (expected == n.order())
          return n;
      }
      auto tseeds = std::vector<Perm>(t->generators().begin(), t->generators().end());
      auto smaller = normal_closure(g, tseeds);
      if (smaller.order() < n.order()) {
        n = std::move(smaller);
        continue;
      }
    }
    if (++failures > certify_attempts) {
      if (enumerable(n))
        return minimal_normals_within(g, n).front();
      throw Error(ErrorCode::LimitExceeded,
                  "could not certify a minimal normal subgroup of order " + std::to_string(n.order()));
    }
  }
}

bool group_less(PermGroup const &a, PermGroup const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  auto ga = a.generators();
  auto gb = b.generators();
  return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end());
}

/// c with 0c = beta commuting with the transitive group m; beta must be
/// fixed by the stabilizer of 0. Built along the Schreier tree of 0.
Perm centralizing_element(PermGroup const &m, Point beta)
{
  std::size_t n = m.degree();
  std::vector<Point> img(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<Point> queue{0};
  img[0] = beta;
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point p = queue[i];
    for (auto const &s : m.generators()) {
      Point q = s[p];
      if (!seen[q]) {
        seen[q] = 1;
        img[q] = s[img[p]];
        queue.push_back(q);
      }
    }
  }
  return Perm(std::move(img));
}

std::vector<Point> fixed_points_of_stabilizer(PermGroup const &m)
{
  auto stab = point_stabilizer(m, 0);
  std::vector<Point> res;
  for (Point x = 0; x < m.degree(); ++x) {
    bool fixed = std::all_of(stab.generators().begin(), stab.generators().end(),
                             [&](Perm const &s) { return s[x] == x; });
    if (fixed)
      res.push_back(x);
  }
  return res;
}

PermGroup centralizer_by_filter(PermGroup const &g, PermGroup const &m)
{
  std::vector<Perm> keep;
  auto mg = m.generators();
  g.for_each_element([&](Perm const &x) {
    if (std::all_of(mg.begin(), mg.end(), [&](Perm const &s) { return x * s == s * x; }))
      keep.push_back(x);
  });
  return generated(g.degree(), keep);
}

PermGroup centralizer_by_conjugation_kernel(PermGroup const &g, PermGroup const &m)
{
  // Conjugation action of g on the g-class of m's generators.
  std::vector<Perm> pts(m.generators().begin(), m.generators().end());
  std::unordered_map<Perm, Point, PermHash> index;
  for (Point i = 0; i < pts.size(); ++i)
    index.emplace(pts[i], i);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (auto const &s : g.generators()) {
      Perm c = pts[i].conjugate(s);
      if (!index.contains(c)) {
        if (pts.size() >= 100'000)
          throw Error(ErrorCode::LimitExceeded, "conjugacy orbit too large for centralizer");
        index.emplace(c, static_cast<Point>(pts.size()));
        pts.push_back(std::move(c));
      }
    }
  }
  std::vector<Perm> action;
  for (auto const &s : g.generators()) {
    std::vector<Point> img(pts.size());
    for (Point i = 0; i < pts.size(); ++i)
      img[i] = index.at(pts[i].conjugate(s));
    action.emplace_back(std::move(img));
  }
  std::vector<Point> all(pts.size());
  std::iota(all.begin(), all.end(), Point{0});
  return action_stabilizer(g, action, pts.size(), all);
}

PermGroup centralizer_by_backtrack(PermGroup const &g, PermGroup const &m)
{
  auto mg = m.generators();
  // Base prefix in breadth-first order along m, so commutation constraints
  // between earlier base points fire as early as possible.
  std::vector<Point> prefix;
  std::vector<char> seen(g.degree(), 0);
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start])
      continue;
    std::size_t first = prefix.size();
    prefix.push_back(start);
    seen[start] = 1;
    for (std::size_t i = first; i < prefix.size(); ++i) {
      for (auto const &s : mg) {
        Point q = s[prefix[i]];
        if (!seen[q]) {
          seen[q] = 1;
          prefix.push_back(q);
        }
      }
    }
  }
  std::vector<std::int64_t> pos(g.degree(), -1);
  auto chain_base = g.chain_with_base(prefix).base();
  for (std::size_t i = 0; i < chain_base.size(); ++i)
    pos[chain_base[i]] = static_cast<std::int64_t>(i);

  return backtrack_subgroup(
    g, prefix,
    [&](std::size_t level, std::span<Point const> bases, std::span<Point const> imgs) {
      for (std::size_t i = 0; i <= level; ++i) {
        for (auto const &s : mg) {
          auto j = pos[s[bases[i]]];
          // x commutes with s: (b_i s) x = (b_i x) s.
          if (j >= 0 && static_cast<std::size_t>(j) <= level &&
              (i == level || static_cast<std::size_t>(j) == level) &&
              imgs[static_cast<std::size_t>(j)] != s[imgs[i]])
            return false;
        }
      }
      return true;
    },
    [&](Perm const &x) {
      return std::all_of(mg.begin(), mg.end(), [&](Perm const &s) { return x * s == s * x; });
    });
}

} // namespace

PermGroup normal_closure(PermGroup const &g, std::span<Perm const> seeds)
{
  std::vector<Perm> gens;
  StabChain chain = StabChain::build(g.degree(), {});
  for (auto const &x : seeds) {
    if (x.degree() != g.degree())
      throw Error(ErrorCode::DegreeMismatch, "normal closure seed of wrong degree");
    if (!x.is_identity() && !chain.contains(x)) {
      Perm one[] = {x};
      chain.add_generators(one);
      gens.push_back(x);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const &s : g.generators()) {
      Perm c = gens[i].conjugate(s);
      if (!chain.contains(c)) {
        Perm one[] = {c};
        chain.add_generators(one);
        gens.push_back(std::move(c));
      }
    }
  }
  return PermGroup(g.degree(), std::move(gens), std::move(chain));
}

PermGroup derived_subgroup(PermGroup const &h)
{
  std::vector<Perm> comms;
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(h, comms);
}

bool normalizes(PermGroup const &g, PermGroup const &h)
{
  for (auto const &x : h.generators())
    for (auto const &s : g.generators())
      if (!h.contains(x.conjugate(s)))
        return false;
  return true;
}

bool is_normal(PermGroup const &g, PermGroup const &h)
{
  if (!g.contains(h))
    throw Error(ErrorCode::NotSubgroup, "is_normal: h is not a subgroup of g");
  return normalizes(g, h);
}

std::vector<NormalSubgroupRecord> minimal_normal_subgroups(PermGroup const &g)
{
  if (g.is_trivial())
    throw Error(ErrorCode::TrivialGroup, "the trivial group has no minimal normal subgroups");

  // The descent through centralizers is usually cheaper than a sweep of a
  // mid-sized group; it fails only on large abelian minimal normals.
  auto descend = [&g]() {
    std::vector<PermGroup> found;
    auto rng = make_rng(0x6d6e6f726d);
    PermGroup k = g;
    while (!k.is_trivial()) {
      if (enumerable(k, descent_order)) {
        for (auto &n : minimal_normals_within(g, k))
          found.push_back(std::move(n));
        break;
      }
      auto n = find_minimal_normal_in(g, k, rng);
      if (is_abelian(n))
        throw Error(ErrorCode::LimitExceeded, "abelian minimal normal subgroup inside a normal subgroup of order " +
                                                  std::to_string(k.order()) + " is too large to sweep");
      k = centralizer_in(k, n);
      found.push_back(std::move(n));
    }
    return found;
  };
  std::vector<PermGroup> found;
  if (enumerable(g, descent_order)) {
    found = minimal_normals_within(g, g);
  } else if (!enumerable(g)) {
    found = descend();
  } else {
    try {
      found = descend();
    } catch (Error const &e) {
      if (e.code() != ErrorCode::LimitExceeded)
        throw;
      found = minimal_normals_within(g, g);
    }
  }

  std::sort(found.begin(), found.end(), group_less);
  std::vector<NormalSubgroupRecord> res;
  for (auto &n : found) {
    NormalSubgroupRecord r;
    r.is_transitive = is_transitive(n);
    r.is_abelian = is_abelian(n);
    r.subgroup = sorted_group(std::move(n));
    res.push_back(std::move(r));
  }
  return res;
}

PermGroup socle(PermGroup const &g)
{
  std::vector<Perm> gens;
  for (auto const &r : minimal_normal_subgroups(g))
    gens.insert(gens.end(), r.subgroup.generators().begin(), r.subgroup.generators().end());
  return generated(g.degree(), gens);
}

bool is_simple(PermGroup const &h)
{
  if (h.is_trivial())
    return false;
  auto mins = minimal_normal_subgroups(h);
  return mins.size() == 1 && mins[0].subgroup.order() == h.order();
}

PermGroup centralizer_in(PermGroup const &g, PermGroup const &m)
{
  if (g.degree() != m.degree())
    throw Error(ErrorCode::DegreeMismatch, "centralizer of a group of another degree");
  if (m.is_trivial() || g.is_trivial())
    return g;
  if (enumerable(g, filter_order))
    return centralizer_by_filter(g, m);
  if (is_transitive(m)) {
    std::vector<Perm> cands;
    for (Point beta : fixed_points_of_stabilizer(m)) {
      Perm c = centralizing_element(m, beta);
      if (g.contains(c))
        cands.push_back(std::move(c));
    }
    return generated(g.degree(), cands);
  }
  if (normalizes(g, m)) {
    try {
      return centralizer_by_conjugation_kernel(g, m);
    } catch (Error const &e) {
      if (e.code() != ErrorCode::LimitExceeded)
        throw;
    }
  }
  return centralizer_by_backtrack(g, m);
}

PermGroup centralizer_in_sym_of_transitive(PermGroup const &m)
{
  if (!is_transitive(m))
    throw Error(ErrorCode::NotTransitive, "centralizer_in_sym_of_transitive needs a transitive group");
  std::vector<Perm> cands;
  for (Point beta : fixed_points_of_stabilizer(m))
    cands.push_back(centralizing_element(m, beta));
  return generated(m.degree(), cands);
}

PermGroup centralizer_in_sym_of_regular(PermGroup const &m)
{
  if (!is_regular(m))
    throw Error(ErrorCode::NotRegular, "centralizer_in_sym_of_regular needs a regular group");
  // beta -> c_beta is an anti-isomorphism M -> C, so generator images suffice.
  std::vector<Perm> gens;
  for (auto const &s : m.generators())
    gens.push_back(centralizing_element(m, s[0]));
  return sorted_group(PermGroup(m.degree(), std::move(gens)));
}

DirectFactorization simple_direct_factors(PermGroup const &m)
{
  if (m.is_trivial())
    throw Error(ErrorCode::TrivialGroup, "trivial group has no direct factorization");
  if (is_abelian(m))
    throw Error(ErrorCode::AbelianFactorization,
                "abelian characteristically simple groups have no unique finest factorization");
  DirectFactorization fact;
  std::uint64_t prod = 1;
  for (auto &r : minimal_normal_subgroups(m)) {
    if (!is_simple(r.subgroup))
      throw Error(ErrorCode::Precondition, "minimal normal factor of order " +
                                               std::to_string(r.subgroup.order()) + " is not simple");
    prod *= r.subgroup.order();
    fact.factors.push_back(std::move(r.subgroup));
  }
  if (prod != m.order())
    throw Error(ErrorCode::Precondition, "group is not characteristically simple");
  return fact;
}

namespace
{

PermGroup cofactor(DirectFactorization const &fact, std::size_t i)
{
  std::vector<Perm> gens;
  for (std::size_t j = 0; j < fact.factors.size(); ++j) {
    if (j != i)
      gens.insert(gens.end(), fact.factors[j].generators().begin(),
                  fact.factors[j].generators().end());
  }
  return PermGroup(fact.factors.at(i).degree(), std::move(gens));
}

Perm project_with(Perm const &x, PermGroup const &factor, PermGroup const &rest)
{
  std::optional<Perm> res;
  factor.chain().for_each_element([&](Perm const &y) {
    if (!res && rest.contains(x * y.inverse()))
      res = y;
  });
  if (!res)
    throw Error(ErrorCode::NotInProduct, "element is not in the direct product");
  return *res;
}

} // namespace

Perm project_to_factor(Perm const &x, DirectFactorization const &fact, std::size_t i)
{
  if (i >= fact.factors.size())
    throw Error(ErrorCode::Precondition, "factor index out of range");
  if (fact.factors[i].order() > sweep_order)
    throw Error(ErrorCode::LimitExceeded, "factor too large to project onto");
  return project_with(x, fact.factors[i], cofactor(fact, i));
}

PermGroup project_to_factor(PermGroup const &h, DirectFactorization const &fact, std::size_t i)
{
  if (i >= fact.factors.size())
    throw Error(ErrorCode::Precondition, "factor index out of range");
  if (fact.factors[i].order() > sweep_order)
    throw Error(ErrorCode::LimitExceeded, "factor too large to project onto");
  auto rest = cofactor(fact, i);
  std::vector<Perm> gens;
  for (auto const &x : h.generators())
    gens.push_back(project_with(x, fact.factors[i], rest));
  return PermGroup(h.degree(), std::move(gens));
}

bool is_subdirect(PermGroup const &h, DirectFactorization const &fact)
{
  for (std::size_t i = 0; i < fact.factors.size(); ++i) {
    if (project_to_factor(h, fact, i).order() != fact.factors[i].order())
      return false;
  }
  return true;
}

PermGroup intersection(PermGroup const &a, PermGroup const &b)
{
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch, "intersection of groups of different degree");
  auto const &small = a.order() <= b.order() ? a : b;
  auto const &large = a.order() <= b.order() ? b : a;
  if (large.contains(small))
    return small;
  if (enumerable(small)) {
    std::vector<Perm> keep;
    small.for_each_element([&](Perm const &x) {
      if (large.contains(x))
        keep.push_back(x);
    });
    return generated(a.degree(), keep);
  }
  return backtrack_subgroup(
    small, {}, [](std::size_t, std::span<Point const>, std::span<Point const>) { return true; },
    [&](Perm const &x) { return large.contains(x); });
}

} // namespace cdecomp
