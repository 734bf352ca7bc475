#include "cdecomp/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <queue>

#include "cdecomp/error.hpp"
#include "cdecomp/structure.hpp"

namespace cdecomp
{

namespace
{

Perm cycle_perm(std::size_t n)
{
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return Perm(std::move(img));
}

bool is_prime(std::size_t p)
{
  if (p < 2)
    return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::size_t parse_size(std::string_view s, std::string const &what)
{
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidSpec, "bad number in " + what);
  return v;
}

std::vector<Perm> identity_list(std::size_t count, std::size_t m)
{
  return std::vector<Perm>(count, Perm(m));
}

// Coordinate partitions of Gamma^l; partition i groups points by coordinate i,
// and its cell c holds coordinate value c.
CartesianDecomposition coordinate_decomposition(std::size_t m, std::size_t l)
{
  std::size_t n = 1;
  for (std::size_t i = 0; i < l; ++i)
    n *= m;
  std::vector<Partition> parts;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::size_t> labels(n);
    for (Point p = 0; p < n; ++p)
      labels[p] = decode_tuple(p, m, l)[i];
    parts.push_back(Partition::from_labels(labels));
  }
  return validate(std::move(parts));
}

// Perm of Gamma^l acting as x at coordinate i and trivially elsewhere.
Perm at_coordinate(Perm const &x, std::size_t i, std::size_t l)
{
  std::size_t m = x.degree();
  auto base = identity_list(l, m);
  base[i] = x;
  return product_action_perm(base, Perm(l), m);
}

// Element of a regular group mapping point 0 to each point.
std::vector<Perm> elements_by_point(PermGroup const &t)
{
  std::vector<Perm> by_point(t.degree());
  t.for_each_element([&](Perm const &x) { by_point[x[0]] = x; });
  return by_point;
}

} // namespace

PermGroup symmetric_group(std::size_t n)
{
  if (n < 2)
    return PermGroup(n);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2)
    gens.push_back(cycle_perm(n));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(std::size_t n)
{
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n)
{
  if (n == 0)
    throw Error(ErrorCode::InvalidSpec, "cyclic group of degree 0");
  return PermGroup(n, {cycle_perm(n)});
}

PermGroup dihedral_group(std::size_t n)
{
  if (n < 3)
    throw Error(ErrorCode::InvalidSpec, "dihedral group needs at least 3 points");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i)
    refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_perm(n), Perm(std::move(refl))});
}

PermGroup psl2_7()
{
  std::vector<Point> shift(8), inv(8);
  for (Point x = 0; x < 7; ++x)
    shift[x] = (x + 1) % 7;
  shift[7] = 7;
  inv[0] = 7;
  inv[7] = 0;
  for (Point x = 1; x < 7; ++x) {
    Point y = 1;
    while ((x * y) % 7 != 1)
      ++y;
    inv[x] = (7 - y) % 7;
  }
  return PermGroup(8, {Perm(std::move(shift)), Perm(std::move(inv))});
}

PermGroup affine_line_group(std::size_t p)
{
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidSpec, "AGL(1,p) needs a prime p, got " + std::to_string(p));
  if (p == 2)
    return PermGroup(2, {cycle_perm(2)});
  std::size_t w = 2;
  for (;; ++w) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * w % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1)
      break;
  }
  std::vector<Point> mul(p);
  for (std::size_t i = 0; i < p; ++i)
    mul[i] = static_cast<Point>(i * w % p);
  return PermGroup(p, {cycle_perm(p), Perm(std::move(mul))});
}

Point RegularRepresentation::point_of(Perm const &x) const
{
  auto it = index->find(x);
  if (it == index->end())
    throw Error(ErrorCode::InvalidPoint, "element " + x.to_cycle_string() + " not in the group");
  return it->second;
}

Perm RegularRepresentation::right_mult(Perm const &x) const
{
  std::vector<Point> img(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    img[i] = point_of(elements[i] * x);
  return Perm(std::move(img));
}

Perm RegularRepresentation::conjugation(Perm const &a) const
{
  std::vector<Point> img(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    img[i] = point_of(elements[i].conjugate(a));
  return Perm(std::move(img));
}

RegularRepresentation regular_representation(PermGroup const &g, std::uint64_t limit)
{
  if (g.order() > limit)
    throw Error(ErrorCode::LimitExceeded,
                "regular representation of a group of order " + std::to_string(g.order()));
  RegularRepresentation rr;
  rr.elements = g.elements(limit);
  std::sort(rr.elements.begin(), rr.elements.end());
  // The identity image table is the lexicographically least.
  auto idx = std::make_shared<std::unordered_map<Perm, Point, PermHash>>();
  for (std::size_t i = 0; i < rr.elements.size(); ++i)
    idx->emplace(rr.elements[i], static_cast<Point>(i));
  rr.index = idx;
  std::size_t n = rr.elements.size();
  std::vector<Perm> right, left;
  for (auto const &s : g.generators()) {
    right.push_back(rr.right_mult(s));
    Perm si = s.inverse();
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = rr.point_of(si * rr.elements[i]);
    left.push_back(Perm(std::move(img)));
  }
  rr.right = PermGroup(n, std::move(right));
  rr.left = PermGroup(n, std::move(left));
  return rr;
}

PermGroup direct_product(std::span<PermGroup const> groups)
{
  std::size_t n = 0;
  for (auto const &g : groups)
    n += g.degree();
  std::vector<Perm> gens;
  std::size_t off = 0;
  for (auto const &g : groups) {
    for (auto const &s : g.generators()) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      for (Point x = 0; x < g.degree(); ++x)
        img[off + x] = static_cast<Point>(off + s[x]);
      gens.push_back(Perm(std::move(img)));
    }
    off += g.degree();
  }
  return PermGroup(n, std::move(gens));
}

WreathProduct wreath_product(WreathSpec const &spec)
{
  std::size_t m = spec.base.degree();
  std::size_t l = spec.top.degree();
  if (m == 0 || l == 0)
    throw Error(ErrorCode::InvalidSpec, "wreath product of an empty action");
  WreathProduct w;
  std::vector<Perm> base_gens, top_gens;
  if (spec.action == WreathAction::Product) {
    if (l < 2)
      throw Error(ErrorCode::InvalidSpec, "product action needs at least two coordinates");
    for (std::size_t i = 0; i < l; ++i)
      for (auto const &s : spec.base.generators())
        base_gens.push_back(at_coordinate(s, i, l));
    for (auto const &t : spec.top.generators())
      top_gens.push_back(product_action_perm(identity_list(l, m), t, m));
    if (m >= 2)
      w.decomposition = coordinate_decomposition(m, l);
  } else {
    std::size_t n = m * l;
    for (std::size_t i = 0; i < l; ++i)
      for (auto const &s : spec.base.generators()) {
        std::vector<Point> img(n);
        std::iota(img.begin(), img.end(), Point{0});
        for (Point x = 0; x < m; ++x)
          img[i * m + x] = static_cast<Point>(i * m + s[x]);
        base_gens.push_back(Perm(std::move(img)));
      }
    for (auto const &t : spec.top.generators()) {
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < l; ++i)
        for (Point x = 0; x < m; ++x)
          img[i * m + x] = static_cast<Point>(t[static_cast<Point>(i)] * m + x);
      top_gens.push_back(Perm(std::move(img)));
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t p = 0; p < n; ++p)
      labels[p] = p / m;
    w.blocks = Partition::from_labels(labels);
  }
  std::size_t n = spec.action == WreathAction::Product ? 0 : m * l;
  if (spec.action == WreathAction::Product) {
    n = 1;
    for (std::size_t i = 0; i < l; ++i)
      n *= m;
  }
  w.base = PermGroup(n, base_gens);
  auto all = base_gens;
  all.insert(all.end(), top_gens.begin(), top_gens.end());
  w.group = PermGroup(n, std::move(all));
  return w;
}

PermGroup holomorph(PermGroup const &m, std::size_t bound)
{
  if (!is_regular(m))
    throw Error(ErrorCode::NotRegular, "holomorph needs a regular group");
  std::size_t n = m.degree();
  if (n > bound)
    throw Error(ErrorCode::LimitExceeded, "holomorph of a group of order " + std::to_string(n) +
                                              " exceeds bound " + std::to_string(bound));
  auto gens = std::vector<Perm>(m.generators().begin(), m.generators().end());
  std::erase_if(gens, [](Perm const &s) { return s.is_identity(); });
  auto elems = m.elements();
  // Candidate images of each generator: elements of the same order.
  std::vector<std::vector<Perm const *>> cand(gens.size());
  double space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const &x : elems)
      if (x.order() == gens[i].order())
        cand[i].push_back(&x);
    space *= static_cast<double>(cand[i].size());
  }
  if (space > 2e7)
    throw Error(ErrorCode::LimitExceeded, "automorphism search space too large");

  PermGroup aut(n);
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<Point> q(n);
  std::vector<char> seen(n);
  auto try_tuple = [&]() -> std::optional<Perm> {
    // q(p^{s_i}) = q(p)^{t_i}, q(0) = 0, consistent on every edge.
    std::fill(q.begin(), q.end(), Point(n));
    std::fill(seen.begin(), seen.end(), 0);
    q[0] = 0;
    seen[0] = 1;
    std::vector<Point> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Point p = queue[h];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Point a = gens[i][p];
        Point b = (*cand[i][choice[i]])[q[p]];
        if (q[a] == n) {
          if (seen[b])
            return std::nullopt;
          q[a] = b;
          seen[b] = 1;
          queue.push_back(a);
        } else if (q[a] != b) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != n)
      return std::nullopt;
    return Perm(q);
  };
  if (!gens.empty()) {
    for (;;) {
      if (auto a = try_tuple(); a && !aut.contains(*a)) {
        std::vector<Perm> extra{*a};
        aut = aut.with_generators(extra);
      }
      std::size_t i = 0;
      while (i < gens.size() && ++choice[i] == cand[i].size())
        choice[i++] = 0;
      if (i == gens.size())
        break;
    }
  }
  auto all = gens;
  for (auto const &a : aut.generators())
    all.push_back(a);
  return PermGroup(n, std::move(all));
}

PermGroup diagonal_embed(PermGroup const &h, std::size_t l)
{
  std::size_t m = h.degree();
  std::vector<Perm> gens;
  for (auto const &s : h.generators())
    gens.push_back(product_action_perm(std::vector<Perm>(l, s), Perm(l), m));
  std::size_t n = 1;
  for (std::size_t i = 0; i < l; ++i)
    n *= m;
  return PermGroup(n, std::move(gens));
}

C3WrD8Example example_c3_wr_d8()
{
  C3WrD8Example ex;
  ex.h = cyclic_group(3);
  PermGroup d8(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}}),
                   Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  ex.wreath = wreath_product({ex.h, d8, WreathAction::Product});
  Perm x = ex.h.generators()[0], x2 = x.pow(2), e(3);
  Perm id4(4);
  auto elt = [&](std::vector<Perm> b) { return product_action_perm(b, id4, 3); };
  ex.m1 = PermGroup(81, {elt({x, x, x, x})});
  ex.m2 = PermGroup(81, {elt({x, x, x2, x2})});
  ex.m3 = PermGroup(81, {elt({x, x2, e, e}), elt({e, e, x, x2})});
  return ex;
}

DiagonalQuotientExample example_diagonal_quotient(PermGroup const &t, std::size_t k, std::size_t l,
                                                  std::size_t max_degree)
{
  if (k == 0 || l < 2)
    throw Error(ErrorCode::InvalidSpec, "diagonal quotient example needs k >= 1 and l >= 2");
  double deg = std::pow(static_cast<double>(t.order()), static_cast<double>(k * l));
  if (deg > static_cast<double>(max_degree))
    throw Error(ErrorCode::LimitExceeded, "degree " + std::to_string(static_cast<std::uint64_t>(deg)) +
                                              " exceeds max degree " + std::to_string(max_degree));
  std::vector<PermGroup> copies(k, t);
  auto rr = regular_representation(k == 1 ? t : direct_product(copies));
  std::size_t m = rr.elements.size();
  DiagonalQuotientExample ex;
  ex.m1 = rr.right;
  ex.n1 = rr.left;
  auto hgens = std::vector<Perm>(rr.right.generators().begin(), rr.right.generators().end());
  hgens.insert(hgens.end(), rr.left.generators().begin(), rr.left.generators().end());
  ex.h = PermGroup(m, hgens);

  std::size_t n = 1;
  for (std::size_t i = 0; i < l; ++i)
    n *= m;
  std::vector<Perm> m1_gens;
  for (std::size_t i = 0; i < l; ++i)
    for (auto const &s : rr.right.generators())
      m1_gens.push_back(at_coordinate(s, i, l));
  ex.m1_power = PermGroup(n, m1_gens);
  ex.n1_diagonal = diagonal_embed(rr.left, l);

  auto gens = m1_gens;
  for (auto const &s : hgens)
    gens.push_back(product_action_perm(std::vector<Perm>(l, s), Perm(l), m));
  auto const top = symmetric_group(l);
  for (auto const &s : top.generators())
    gens.push_back(product_action_perm(identity_list(l, m), s, m));
  ex.group = PermGroup(n, std::move(gens));
  ex.decomposition = coordinate_decomposition(m, l);
  return ex;
}

PermGroup simple_diagonal_group(PermGroup const &t)
{
  auto rr = regular_representation(t);
  std::size_t n = rr.elements.size();
  auto gens = std::vector<Perm>(rr.right.generators().begin(), rr.right.generators().end());
  gens.insert(gens.end(), rr.left.generators().begin(), rr.left.generators().end());
  std::vector<Point> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    inv[i] = rr.point_of(rr.elements[i].inverse());
  gens.push_back(Perm(std::move(inv)));
  return PermGroup(n, std::move(gens));
}

Perm inner_automorphism(PermGroup const &regular_t, Perm const &a)
{
  if (!regular_t.contains(a))
    throw Error(ErrorCode::NotSubgroup, "conjugating element not in T");
  auto by_point = elements_by_point(regular_t);
  std::vector<Point> img(by_point.size());
  for (std::size_t v = 0; v < by_point.size(); ++v)
    img[v] = by_point[v].conjugate(a)[0];
  return Perm(std::move(img));
}

TwistedWreath twisted_wreath(TwistedWreathSpec const &spec)
{
  auto const &t = spec.t;
  if (!is_regular(t))
    throw Error(ErrorCode::InvalidSpec, "T must act regularly");
  if (is_abelian(t) || !is_simple(t))
    throw Error(ErrorCode::InvalidSpec, "T must be non-abelian simple");
  if (spec.q.degree() != spec.p.degree() || !spec.p.contains(spec.q))
    throw Error(ErrorCode::InvalidSpec, "Q must be a subgroup of P");
  if (spec.phi.size() != spec.q.generators().size())
    throw Error(ErrorCode::InvalidSpec, "phi needs one image per generator of Q");
  if (spec.p.order() > 100'000)
    throw Error(ErrorCode::LimitExceeded, "P too large to enumerate");

  // Right cosets Qx with lexicographically least representatives.
  auto p_elems = spec.p.elements();
  std::sort(p_elems.begin(), p_elems.end());
  auto q_elems = spec.q.elements();
  std::unordered_map<Perm, std::size_t, PermHash> coset_of;
  std::vector<Perm> reps;
  for (auto const &x : p_elems) {
    if (coset_of.contains(x))
      continue;
    for (auto const &q : q_elems)
      coset_of.emplace(q * x, reps.size());
    reps.push_back(x);
  }
  std::size_t k = reps.size();
  if (k < 2)
    throw Error(ErrorCode::InvalidSpec, "Q must be a proper subgroup of P");

  // Core-free: P acts faithfully on the cosets.
  std::vector<Perm> coset_action;
  for (auto const &g : spec.p.generators()) {
    std::vector<Point> img(k);
    for (std::size_t i = 0; i < k; ++i)
      img[i] = static_cast<Point>(coset_of.at(reps[i] * g));
    coset_action.push_back(Perm(std::move(img)));
  }
  if (PermGroup(k, coset_action).order() != spec.p.order())
    throw Error(ErrorCode::InvalidSpec, "Q is not core-free in P");

  std::size_t m = t.degree();
  auto by_point = elements_by_point(t);
  std::vector<Perm> inner_of;   // conjugating element for each phi generator
  for (auto const &f : spec.phi) {
    if (f.degree() != m)
      throw Error(ErrorCode::InvalidSpec, "phi image of wrong degree");
    std::optional<Perm> found;
    for (auto const &a : by_point)
      if (inner_automorphism(t, a) == f) {
        found = a;
        break;
      }
    if (!found)
      throw Error(ErrorCode::InvalidSpec, "phi image is not an inner automorphism of T");
    inner_of.push_back(*found);
  }

  // Extend phi over Q, checking it is a homomorphism.
  std::unordered_map<Perm, Perm, PermHash> phi;
  auto const qgens = spec.q.generators();
  phi.emplace(Perm(spec.q.degree()), Perm(m));
  std::vector<Perm> frontier{Perm(spec.q.degree())};
  for (std::size_t h = 0; h < frontier.size(); ++h) {
    Perm x = frontier[h];
    Perm fx = phi.at(x);
    for (std::size_t j = 0; j < qgens.size(); ++j) {
      Perm y = x * qgens[j];
      Perm fy = fx * spec.phi[j];
      auto [it, fresh] = phi.emplace(y, fy);
      if (fresh)
        frontier.push_back(y);
      else if (it->second != fy)
        throw Error(ErrorCode::InvalidSpec, "phi is not a homomorphism on Q");
    }
  }

  auto image_order = PermGroup(m, inner_of).order();
  if (image_order == 1)
    throw Error(ErrorCode::InvalidSpec, "phi has trivial image");
  if (image_order == t.order())
    throw Error(ErrorCode::InvalidSpec, "phi maps onto Inn T");

  // Cell (j, v) is cell j*m + v. Function values satisfy f(q r) = f(r)^{phi(q)^-1}.
  std::size_t cells = k * m;
  std::vector<Perm> cell_gens, socle_gens;
  for (std::size_t i = 0; i < k; ++i)
    for (auto const &tau : t.generators()) {
      std::vector<Point> img(cells);
      std::iota(img.begin(), img.end(), Point{0});
      for (Point v = 0; v < m; ++v)
        img[i * m + v] = static_cast<Point>(i * m + tau[v]);
      socle_gens.push_back(Perm(std::move(img)));
    }
  cell_gens = socle_gens;
  for (auto const &g : spec.p.generators()) {
    Perm gi = g.inverse();
    std::vector<Point> img(cells);
    for (std::size_t i = 0; i < k; ++i) {
      Perm y = reps[i] * gi;
      std::size_t j = coset_of.at(y);
      Perm qi = y * reps[j].inverse();
      Perm f = phi.at(qi).inverse();
      for (Point v = 0; v < m; ++v)
        img[j * m + v] = static_cast<Point>(i * m + f[v]);
    }
    cell_gens.push_back(Perm(std::move(img)));
  }

  auto e = coordinate_decomposition(m, k);
  std::vector<Perm> point_gens;
  for (auto const &c : cell_gens)
    point_gens.push_back(from_cells(e, c));
  PermGroup cell_group(cells, cell_gens);
  TwistedWreath w{e, CellGroup(e, cell_group), PermGroup(cells, socle_gens), std::move(point_gens), k};
  return w;
}

TwistedWreathSpec example_twisted_spec()
{
  auto rr = regular_representation(alternating_group(5));
  TwistedWreathSpec s;
  s.t = rr.right;
  s.p = symmetric_group(3);
  s.q = PermGroup(3, {Perm::from_cycles(3, {{0, 1}})});
  Perm a = rr.right_mult(Perm::from_cycles(5, {{0, 1}, {2, 3}}));
  s.phi = {inner_automorphism(s.t, a)};
  return s;
}

PermGroup named_group(std::string const &name)
{
  auto num = [&](std::size_t skip) { return parse_size(std::string_view(name).substr(skip), name); };
  if (name == "PSL27")
    return psl2_7();
  if (name == "V4")
    return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  if (name == "SD_A5")
    return simple_diagonal_group(alternating_group(5));
  if (name.starts_with("REG_"))
    return regular_representation(named_group(name.substr(4))).right;
  if (name.starts_with("AGL1_"))
    return affine_line_group(num(5));
  if (!name.empty()) {
    switch (name[0]) {
    case 'S': return symmetric_group(num(1));
    case 'A': return alternating_group(num(1));
    case 'C': return cyclic_group(num(1));
    case 'D': {
      std::size_t o = num(1);
      if (o % 2)
        throw Error(ErrorCode::InvalidSpec, "dihedral order must be even: " + name);
      return dihedral_group(o / 2);
    }
    default: break;
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown group name '" + name + "'");
}

Constructed construct(std::string const &kind, std::map<std::string, std::string> const &params)
{
  auto check_keys = [&](std::initializer_list<std::string_view> allowed) {
    for (auto const &[key, value] : params)
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw Error(ErrorCode::InvalidSpec, "unknown parameter '" + key + "' for " + kind);
  };
  auto get = [&](std::string const &key, std::string const &def) {
    auto it = params.find(key);
    if (it != params.end())
      return it->second;
    if (def.empty())
      throw Error(ErrorCode::InvalidSpec, kind + " needs parameter '" + key + "'");
    return def;
  };

  Constructed c;
  if (kind == "wreath") {
    check_keys({"base", "top", "action"});
    auto action = get("action", "product");
    if (action != "product" && action != "imprimitive")
      throw Error(ErrorCode::InvalidSpec, "action must be product or imprimitive");
    auto w = wreath_product({named_group(get("base", "")), named_group(get("top", "")),
                             action == "product" ? WreathAction::Product : WreathAction::Imprimitive});
    c.name = get("base", "") + " wr " + get("top", "") + " (" + action + ")";
    c.group = w.group;
    c.decomposition = w.decomposition;
  } else if (kind == "holomorph") {
    check_keys({"group"});
    c.name = "Hol(" + get("group", "") + ")";
    c.group = holomorph(named_group(get("group", "")));
  } else if (kind == "example") {
    check_keys({"name", "t", "k", "l"});
    auto name = get("name", "");
    if (name == "c3d8") {
      auto ex = example_c3_wr_d8();
      c.name = "C3 wr D8";
      c.group = ex.wreath.group;
      c.decomposition = ex.wreath.decomposition;
    } else if (name == "diagq") {
      auto ex = example_diagonal_quotient(named_group(get("t", "A5")), parse_size(get("k", "1"), "k"),
                                          parse_size(get("l", "2"), "l"));
      c.name = "diagonal quotient example";
      c.group = ex.group;
      c.decomposition = ex.decomposition;
    } else {
      throw Error(ErrorCode::InvalidSpec, "unknown example '" + name + "'");
    }
  } else if (kind == "twisted") {
    check_keys({});
    auto w = twisted_wreath(example_twisted_spec());
    c.name = "twisted wreath A5 by S3";
    c.group = PermGroup(w.decomposition.degree(), w.point_generators);
    c.decomposition = w.decomposition;
    c.cells = w.cells;
  } else if (kind == "group") {
    check_keys({"name"});
    c.name = get("name", "");
    c.group = named_group(c.name);
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown construction kind '" + kind + "'");
  }
  return c;
}

} // namespace cdecomp
