#include "cdecomp/cartesian.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cdecomp/error.hpp"

namespace cdecomp
{

namespace
{

std::string tuple_string(std::span<std::size_t const> t)
{
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? ", " : "") + std::to_string(t[i]);
  return s + ")";
}

std::vector<std::size_t> decode_mixed(std::size_t code, std::span<std::size_t const> radix)
{
  std::vector<std::size_t> t(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    t[i] = code % radix[i];
    code /= radix[i];
  }
  return t;
}

} // namespace

bool CartesianDecomposition::homogeneous() const noexcept
{
  return std::all_of(_parts.begin(), _parts.end(),
                     [&](Partition const &p) { return p.size() == _parts.front().size(); });
}

std::size_t CartesianDecomposition::find(Partition const &p) const
{
  auto it = std::lower_bound(_parts.begin(), _parts.end(), p);
  if (it == _parts.end() || *it != p)
    return _parts.size();
  return static_cast<std::size_t>(it - _parts.begin());
}

Point CartesianDecomposition::point_of(std::span<std::size_t const> cells) const
{
  std::size_t code = 0;
  for (std::size_t i = 0; i < _parts.size(); ++i)
    code = code * _parts[i].size() + cells[i];
  return _point_of[code];
}

CartesianDecomposition validate(std::vector<Partition> parts)
{
  if (parts.size() < 2)
    throw Error(ErrorCode::InvalidSpec, "a Cartesian decomposition needs at least two partitions");
  std::size_t n = parts.front().degree();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() != n)
      throw Error(ErrorCode::InvalidSpec, "partitions over different point sets");
    if (!parts[i].is_proper())
      throw Error(ErrorCode::NotProper, "partition " + parts[i].to_string() + " is not proper");
  }
  std::sort(parts.begin(), parts.end());

  std::vector<std::size_t> radix;
  std::size_t total = 1;
  for (auto const &p : parts) {
    radix.push_back(p.size());
    if (total > n)
      break;
    total *= p.size();
  }

  CartesianDecomposition e;
  auto code_of = [&](Point x) {
    std::size_t code = 0;
    for (auto const &p : parts)
      code = code * p.size() + p.cell_of(x);
    return code;
  };

  if (total != n) {
    // Either two points share a tuple, or some tuple is empty.
    if (total < n) {
      std::map<std::size_t, Point> seen;
      for (Point x = 0; x < n; ++x) {
        auto [it, fresh] = seen.emplace(code_of(x), x);
        if (!fresh)
          throw Error(ErrorCode::BadIntersection,
                      "cell tuple " + tuple_string(decode_mixed(it->first, radix)) +
                        " meets in more than one point (" + std::to_string(it->second) + " and " +
                        std::to_string(x) + ")");
      }
    }
    std::set<std::size_t> hit;
    for (Point x = 0; x < n; ++x)
      hit.insert(code_of(x));
    std::size_t missing = 0;
    while (hit.contains(missing))
      ++missing;
    if (radix.size() == parts.size())
      throw Error(ErrorCode::BadIntersection,
                  "cell tuple " + tuple_string(decode_mixed(missing, radix)) + " has empty intersection");
    throw Error(ErrorCode::BadIntersection, "cell counts multiply beyond the degree");
  }

  e._point_of.assign(n, 0);
  std::vector<char> used(n, 0);
  for (Point x = 0; x < n; ++x) {
    auto code = code_of(x);
    if (used[code])
      throw Error(ErrorCode::BadIntersection,
                  "cell tuple " + tuple_string(decode_mixed(code, radix)) +
                    " meets in more than one point (" + std::to_string(e._point_of[code]) + " and " +
                    std::to_string(x) + ")");
    used[code] = 1;
    e._point_of[code] = x;
  }

  e._offsets.push_back(0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    e._offsets.push_back(e._offsets.back() + parts[i].size());
    e._part_of_cell.insert(e._part_of_cell.end(), parts[i].size(), i);
  }
  e._parts = std::move(parts);
  return e;
}

namespace
{

/// Image partition index for each partition, or nullopt if x does not
/// preserve e.
std::optional<std::vector<std::size_t>> partition_images(CartesianDecomposition const &e, Perm const &x)
{
  if (x.degree() != e.degree())
    throw Error(ErrorCode::DegreeMismatch, "permutation and decomposition differ in degree");
  std::vector<std::size_t> img(e.index());
  for (std::size_t i = 0; i < e.index(); ++i) {
    img[i] = e.find(e.partition(i).image(x));
    if (img[i] == e.index())
      return std::nullopt;
  }
  return img;
}

} // namespace

bool is_invariant(PermGroup const &g, CartesianDecomposition const &e)
{
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](Perm const &s) { return partition_images(e, s).has_value(); });
}

Perm partition_action(CartesianDecomposition const &e, Perm const &x)
{
  auto img = partition_images(e, x);
  if (!img)
    throw Error(ErrorCode::NotInvariant, "permutation does not preserve the decomposition");
  return Perm(std::vector<Point>(img->begin(), img->end()));
}

bool is_transitive_on(PermGroup const &g, CartesianDecomposition const &e)
{
  std::vector<Perm> action;
  for (auto const &s : g.generators())
    action.push_back(partition_action(e, s));
  return orbit_of(action, e.index(), 0).size() == e.index();
}

Perm to_cells(CartesianDecomposition const &e, Perm const &x)
{
  auto img = partition_images(e, x);
  if (!img)
    throw Error(ErrorCode::NotInvariant, "permutation does not preserve the decomposition");
  std::vector<Point> cells(e.cell_degree());
  for (std::size_t i = 0; i < e.index(); ++i) {
    auto const &p = e.partition(i);
    auto const &q = e.partition((*img)[i]);
    for (std::size_t c = 0; c < p.size(); ++c)
      cells[e.offset(i) + c] = static_cast<Point>(e.offset((*img)[i]) + q.cell_of(x[p.cell(c).front()]));
  }
  return Perm(std::move(cells));
}

std::vector<std::size_t> cells_of_point(CartesianDecomposition const &e, Point p)
{
  std::vector<std::size_t> t(e.index());
  for (std::size_t i = 0; i < e.index(); ++i)
    t[i] = e.partition(i).cell_of(p);
  return t;
}

namespace
{

void check_cell_perm(CartesianDecomposition const &e, Perm const &c)
{
  if (c.degree() != e.cell_degree())
    throw Error(ErrorCode::DegreeMismatch, "cell permutation of wrong degree");
  for (std::size_t i = 0; i < e.index(); ++i) {
    auto j = e.partition_of_cell(c[static_cast<Point>(e.offset(i))]);
    if (e.partition(j).size() != e.partition(i).size())
      throw Error(ErrorCode::NotInvariant, "cell permutation does not respect partitions");
    for (std::size_t k = e.offset(i); k < e.offset(i + 1); ++k)
      if (e.partition_of_cell(c[static_cast<Point>(k)]) != j)
        throw Error(ErrorCode::NotInvariant, "cell permutation does not respect partitions");
  }
}

Point apply_cells(CartesianDecomposition const &e, Perm const &c, std::span<std::size_t const> t,
                  std::vector<std::size_t> &buf)
{
  buf.resize(e.index());
  for (std::size_t i = 0; i < e.index(); ++i) {
    auto img = c[static_cast<Point>(e.offset(i) + t[i])];
    auto j = e.partition_of_cell(img);
    buf[j] = img - e.offset(j);
  }
  return e.point_of(buf);
}

} // namespace

Perm from_cells(CartesianDecomposition const &e, Perm const &c)
{
  check_cell_perm(e, c);
  std::vector<Point> img(e.degree());
  std::vector<std::size_t> t(e.index()), buf;
  for (Point x = 0; x < e.degree(); ++x) {
    for (std::size_t i = 0; i < e.index(); ++i)
      t[i] = e.partition(i).cell_of(x);
    img[x] = apply_cells(e, c, t, buf);
  }
  return Perm(std::move(img));
}

CellGroup::CellGroup(PermGroup const &g, CartesianDecomposition e)
: _e(std::move(e))
{
  std::vector<Perm> gens;
  for (auto const &s : g.generators())
    gens.push_back(to_cells(_e, s));
  _cells = PermGroup(_e.cell_degree(), std::move(gens));
}

CellGroup::CellGroup(CartesianDecomposition e, PermGroup cells)
: _e(std::move(e)), _cells(std::move(cells))
{
  if (_cells.degree() != _e.cell_degree())
    throw Error(ErrorCode::DegreeMismatch, "cell group of wrong degree");
  for (auto const &s : _cells.generators())
    check_cell_perm(_e, s);
}

namespace
{

Perm cell_partition_action(CartesianDecomposition const &e, Perm const &c)
{
  std::vector<Point> img(e.index());
  for (std::size_t i = 0; i < e.index(); ++i)
    img[i] = static_cast<Point>(e.partition_of_cell(c[static_cast<Point>(e.offset(i))]));
  return Perm(std::move(img));
}

} // namespace

PermGroup CellGroup::partition_action_group() const
{
  std::vector<Perm> act;
  for (auto const &s : _cells.generators())
    act.push_back(cell_partition_action(_e, s));
  return PermGroup(_e.index(), std::move(act));
}

std::vector<Perm> CellGroup::partition_stabilizer_generators(std::size_t i) const
{
  auto gens = _cells.generators();
  std::vector<Perm> act;
  for (auto const &s : gens)
    act.push_back(cell_partition_action(_e, s));

  // Schreier tree of the orbit of i on partitions, labelled by cell elements.
  std::vector<std::optional<Perm>> rep(_e.index());
  rep[i] = Perm(_e.cell_degree());
  std::vector<std::size_t> orb{i};
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto q = act[s][static_cast<Point>(orb[k])];
      if (!rep[q]) {
        rep[q] = *rep[orb[k]] * gens[s];
        orb.push_back(q);
      }
    }
  }
  std::vector<Perm> res;
  for (auto p : orb) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto q = act[s][static_cast<Point>(p)];
      Perm x = *rep[p] * gens[s] * rep[q]->inverse();
      if (!x.is_identity() && std::find(res.begin(), res.end(), x) == res.end())
        res.push_back(std::move(x));
    }
  }
  return res;
}

Perm CellGroup::restrict(Perm const &c, std::size_t i) const
{
  std::size_t m = _e.partition(i).size();
  std::vector<Point> img(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto y = c[static_cast<Point>(_e.offset(i) + k)];
    if (_e.partition_of_cell(y) != i)
      throw Error(ErrorCode::Precondition, "cell permutation moves the partition");
    img[k] = static_cast<Point>(y - _e.offset(i));
  }
  return Perm(std::move(img));
}

Perm CellGroup::extend(Perm const &x, std::size_t i) const
{
  std::vector<Point> img(_e.cell_degree());
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t k = 0; k < x.degree(); ++k)
    img[_e.offset(i) + k] = static_cast<Point>(_e.offset(i) + x[static_cast<Point>(k)]);
  return Perm(std::move(img));
}

std::vector<Point> CellGroup::point_orbit(std::span<Perm const> cell_gens, Point p) const
{
  std::vector<char> seen(_e.degree(), 0);
  std::vector<Point> orb{p};
  seen[p] = 1;
  std::vector<std::size_t> t, buf;
  for (std::size_t k = 0; k < orb.size(); ++k) {
    t = cells_of_point(_e, orb[k]);
    for (auto const &c : cell_gens) {
      Point q = apply_cells(_e, c, t, buf);
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool CellGroup::transitive_on_points(PermGroup const &h) const
{ return point_orbit(h.generators(), 0).size() == _e.degree(); }

PermGroup CellGroup::point_stabilizer(PermGroup const &h, Point p) const
{
  auto t = cells_of_point(_e, p);
  std::vector<Point> cells;
  for (std::size_t i = 0; i < t.size(); ++i)
    cells.push_back(static_cast<Point>(_e.offset(i) + t[i]));
  // p is fixed iff the set of cells through p is; partitions may be permuted.
  std::sort(cells.begin(), cells.end());
  return setwise_stabilizer(h, cells);
}

PermGroup CellGroup::kernel_on(PermGroup const &h, std::span<std::size_t const> parts) const
{
  std::vector<Point> cells;
  for (auto i : parts)
    for (std::size_t k = _e.offset(i); k < _e.offset(i + 1); ++k)
      cells.push_back(static_cast<Point>(k));
  return pointwise_stabilizer(h, cells);
}

PermGroup CellGroup::lift(PermGroup const &h) const
{
  std::vector<Perm> gens;
  for (auto const &c : h.generators())
    gens.push_back(from_cells(_e, c));
  return PermGroup(_e.degree(), std::move(gens));
}

PermGroup component(CellGroup const &g, std::size_t i)
{
  std::vector<Perm> gens;
  for (auto const &c : g.partition_stabilizer_generators(i))
    gens.push_back(g.restrict(c, i));
  return PermGroup(g.decomposition().partition(i).size(), std::move(gens));
}

PermGroup component(PermGroup const &g, CartesianDecomposition const &e, std::size_t i)
{ return component(CellGroup(g, e), i); }

std::vector<std::size_t> decode_tuple(Point p, std::size_t m, std::size_t l)
{
  std::vector<std::size_t> radix(l, m);
  return decode_mixed(p, radix);
}

Point encode_tuple(std::span<std::size_t const> t, std::size_t m)
{
  std::size_t code = 0;
  for (auto x : t)
    code = code * m + x;
  return static_cast<Point>(code);
}

Perm product_action_perm(std::span<Perm const> base, Perm const &top, std::size_t m)
{
  std::size_t l = base.size();
  if (top.degree() != l)
    throw Error(ErrorCode::DegreeMismatch, "top permutation degree differs from the number of coordinates");
  std::size_t n = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (base[i].degree() != m)
      throw Error(ErrorCode::DegreeMismatch, "base entry of wrong degree");
    n *= m;
  }
  std::vector<Point> img(n);
  std::vector<std::size_t> t(l), u(l);
  for (Point p = 0; p < n; ++p) {
    std::size_t code = p;
    for (std::size_t i = l; i-- > 0;) {
      t[i] = code % m;
      code /= m;
    }
    for (std::size_t i = 0; i < l; ++i)
      u[top[static_cast<Point>(i)]] = base[i][static_cast<Point>(t[i])];
    img[p] = encode_tuple(u, m);
  }
  return Perm(std::move(img));
}

WreathEmbedding embed(PermGroup const &g, CartesianDecomposition const &e)
{
  if (!e.homogeneous())
    throw Error(ErrorCode::NotHomogeneous, "embedding needs a homogeneous decomposition");
  if (!is_invariant(g, e))
    throw Error(ErrorCode::NotInvariant, "group does not preserve the decomposition");
  if (!is_transitive_on(g, e))
    throw Error(ErrorCode::NotTransitive, "group is not transitive on the decomposition");

  std::size_t l = e.index();
  std::size_t m = e.partition(0).size();
  auto gens = g.generators();
  std::vector<Perm> act;
  for (auto const &s : gens)
    act.push_back(partition_action(e, s));

  // Breadth-first: rep[i] maps partition 0 to partition i; g_i = rep[i]^-1.
  std::vector<std::optional<Perm>> rep(l);
  rep[0] = Perm(g.degree());
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto q = act[s][static_cast<Point>(queue[k])];
      if (!rep[q]) {
        rep[q] = *rep[queue[k]] * gens[s];
        queue.push_back(q);
      }
    }
  }

  WreathEmbedding w;
  w.cell_count = m;
  auto const &p0 = e.partition(0);
  for (std::size_t i = 0; i < l; ++i) {
    Perm gi = rep[i]->inverse();
    std::vector<std::size_t> alpha(m);
    auto const &pi = e.partition(i);
    for (std::size_t c = 0; c < m; ++c)
      alpha[c] = p0.cell_of(gi[pi.cell(c).front()]);
    w.cell_maps.push_back(std::move(gi));
    w.alpha.push_back(std::move(alpha));
  }

  std::size_t n = e.degree();
  w.theta.resize(n);
  w.theta_prime.resize(n);
  std::vector<std::size_t> t(l);
  for (Point x = 0; x < n; ++x) {
    w.theta[x] = cells_of_point(e, x);
    for (std::size_t i = 0; i < l; ++i)
      t[i] = w.alpha[i][w.theta[x][i]];
    w.theta_prime[x] = encode_tuple(t, m);
  }

  for (std::size_t s = 0; s < gens.size(); ++s) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x)
      img[w.theta_prime[x]] = w.theta_prime[gens[s][x]];
    w.chi_images.emplace_back(std::move(img));

    // Base entry i is the action on partition-0 cells of g_i^-1 x g_{i sigma}.
    std::vector<Perm> base;
    for (std::size_t i = 0; i < l; ++i) {
      auto j = act[s][static_cast<Point>(i)];
      Perm y = w.cell_maps[i].inverse() * gens[s] * w.cell_maps[j];
      std::vector<Point> cimg(m);
      for (std::size_t c = 0; c < m; ++c)
        cimg[c] = static_cast<Point>(p0.cell_of(y[p0.cell(c).front()]));
      base.emplace_back(std::move(cimg));
    }
    w.chi_base.push_back(std::move(base));
    w.chi_top.push_back(act[s]);
  }
  return w;
}

namespace
{

std::vector<Perm> small_generating_set(PermGroup const &g)
{
  auto gens = std::vector<Perm>(g.generators().begin(), g.generators().end());
  if (gens.size() <= 2)
    return gens;
  auto rng = make_rng(0x736d616c6c);
  for (std::size_t k = 2; k < gens.size(); ++k) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::vector<Perm> cand;
      for (std::size_t i = 0; i < k; ++i)
        cand.push_back(g.random_element(rng));
      if (PermGroup(g.degree(), cand).order() == g.order())
        return cand;
    }
  }
  return gens;
}

std::vector<std::vector<Point>> all_permutations(std::size_t d)
{
  std::vector<std::vector<Point>> res;
  std::vector<Point> p(d);
  std::iota(p.begin(), p.end(), Point{0});
  do
    res.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return res;
}

/// First permutation of each cycle type (conjugacy class representatives).
std::vector<std::vector<Point>> class_representatives(std::size_t d)
{
  std::set<std::vector<std::size_t>> types;
  std::vector<std::vector<Point>> res;
  for (auto &p : all_permutations(d)) {
    std::vector<std::size_t> type;
    for (auto const &c : Perm(p).cycles())
      type.push_back(c.size());
    type.resize(type.size() + (d - Perm(p).support_size()), 1);
    std::sort(type.begin(), type.end());
    if (types.insert(type).second)
      res.push_back(std::move(p));
  }
  return res;
}

/// Subgroups of index d up to conjugacy, as stabilizers of transitive
/// actions on d points.
std::vector<PermGroup> subgroups_of_index(PermGroup const &g, std::vector<Perm> const &gens, std::size_t d,
                                          std::uint64_t budget)
{
  if (d == 1)
    return {g};
  if (g.order() % d != 0)
    return {};
  PermGroup gs(g.degree(), gens);
  auto sgens = gs.generators();

  // Random words for the order prefilter.
  auto rng = make_rng(0x776f726473 + d);
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::uint64_t> word_orders;
  for (int w = 0; w < 24; ++w) {
    std::vector<std::size_t> word;
    Perm x(g.degree());
    for (int k = 0; k < 6; ++k) {
      word.push_back(rng() % sgens.size());
      x *= sgens[word.back()];
    }
    words.push_back(word);
    word_orders.push_back(x.order());
  }

  auto perms = all_permutations(d);
  auto reps = class_representatives(d);
  std::uint64_t combos = reps.size();
  for (std::size_t i = 1; i < sgens.size(); ++i) {
    combos *= perms.size();
    if (combos > budget)
      throw Error(ErrorCode::SearchTooLarge, "homomorphism enumeration to S_" + std::to_string(d) +
                                                 " exceeds " + std::to_string(budget) + " candidates");
  }

  std::vector<PermGroup> found;
  std::vector<std::size_t> choice(sgens.size(), 0);
  std::vector<Perm> images(sgens.size(), Perm(d));
  for (std::uint64_t k = 0; k < combos; ++k) {
    std::uint64_t code = k;
    images[0] = Perm(reps[code % reps.size()]);
    code /= reps.size();
    for (std::size_t i = 1; i < sgens.size(); ++i) {
      images[i] = Perm(perms[code % perms.size()]);
      code /= perms.size();
    }
    bool ok = true;
    for (std::size_t i = 0; i < sgens.size() && ok; ++i)
      ok = sgens[i].order() % images[i].order() == 0;
    for (std::size_t w = 0; w < words.size() && ok; ++w) {
      Perm x(d);
      for (auto s : words[w])
        x *= images[s];
      ok = word_orders[w] % x.order() == 0;
    }
    if (!ok || orbit_of(images, d, 0).size() != d)
      continue;

    // Exact homomorphism test: the graph has order |G|.
    std::vector<Perm> graph;
    for (std::size_t i = 0; i < sgens.size(); ++i) {
      std::vector<Point> img(g.degree() + d);
      for (Point x = 0; x < g.degree(); ++x)
        img[x] = sgens[i][x];
      for (Point y = 0; y < d; ++y)
        img[g.degree() + y] = static_cast<Point>(g.degree() + images[i][y]);
      graph.emplace_back(std::move(img));
    }
    if (PermGroup(g.degree() + d, graph).order() != g.order())
      continue;

    Point zero[] = {0};
    auto y = action_stabilizer(gs, images, d, zero);
    if (std::none_of(found.begin(), found.end(), [&](PermGroup const &f) { return same_group(f, y); }))
      found.push_back(std::move(y));
  }
  return found;
}

std::vector<Partition> partition_orbit(PermGroup const &g, Partition const &p, std::size_t cap)
{
  std::vector<Partition> orb{p};
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (auto const &s : g.generators()) {
      auto q = orb[k].image(s);
      if (std::find(orb.begin(), orb.end(), q) == orb.end()) {
        orb.push_back(std::move(q));
        if (orb.size() > cap)
          return {};
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

} // namespace

std::vector<CartesianDecomposition> search_invariant_decompositions(PermGroup const &g,
                                                                    SearchOptions const &opts)
{
  std::size_t n = g.degree();
  if (n > opts.max_degree)
    throw Error(ErrorCode::SearchTooLarge, "degree " + std::to_string(n) + " exceeds the search bound " +
                                               std::to_string(opts.max_degree));
  if (!is_transitive(g))
    throw Error(ErrorCode::NotTransitive, "decomposition search needs a transitive group");

  std::size_t max_index = opts.max_index;
  std::size_t log2n = 0;
  while ((std::size_t{2} << log2n) <= n)
    ++log2n;
  max_index = std::min(max_index, log2n);
  if (max_index < 2)
    return {};

  auto gens = small_generating_set(g);
  std::set<std::vector<Partition>> orbit_set;
  for (std::size_t d = 1; d <= max_index; ++d) {
    for (auto const &y : subgroups_of_index(g, gens, d, opts.max_homomorphisms)) {
      if (!is_transitive(y))
        continue;
      for (auto const &p : all_block_systems(y)) {
        auto orb = partition_orbit(g, p, max_index);
        if (!orb.empty())
          orbit_set.insert(std::move(orb));
      }
    }
  }

  std::vector<std::vector<Partition>> orbs(orbit_set.begin(), orbit_set.end());
  std::set<CartesianDecomposition> res;
  std::vector<Partition> chosen;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t prod) {
    if (prod == n && chosen.size() >= 2) {
      try {
        res.insert(validate(chosen));
      } catch (Error const &) {
      }
      return;
    }
    for (std::size_t j = k; j < orbs.size(); ++j) {
      std::size_t next = prod;
      bool fits = chosen.size() + orbs[j].size() <= max_index;
      for (auto const &p : orbs[j]) {
        next *= p.size();
        fits = fits && next <= n && n % next == 0;
      }
      if (!fits)
        continue;
      chosen.insert(chosen.end(), orbs[j].begin(), orbs[j].end());
      rec(j + 1, next);
      chosen.resize(chosen.size() - orbs[j].size());
    }
  };
  rec(0, 1);
  return {res.begin(), res.end()};
}

CartesianDecomposition parse_decomposition(std::istream &in)
{
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Partition> parts;
  while (std::getline(in, line)) {
    ++line_no;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#')
      continue;
    if (!degree) {
      degree = parse_degree_line(line.substr(b), line_no);
      continue;
    }
    auto fail = [&](std::string const &msg) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    };
    std::vector<std::vector<Point>> cells;
    std::size_t i = 0;
    while (i < line.size()) {
      char ch = line[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      if (ch != '{')
        fail("expected '{' at column " + std::to_string(i + 1));
      ++i;
      std::vector<Point> cell;
      for (;;) {
        while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ','))
          ++i;
        if (i == line.size())
          fail("unterminated cell");
        if (line[i] == '}') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(line[i])))
          fail("unexpected character '" + std::string(1, line[i]) + "' at column " + std::to_string(i + 1));
        unsigned long long v = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
          v = v * 10 + static_cast<unsigned>(line[i] - '0');
          if (v >= *degree)
            fail("point out of range for degree " + std::to_string(*degree));
          ++i;
        }
        cell.push_back(static_cast<Point>(v));
      }
      if (cell.empty())
        fail("empty cell");
      cells.push_back(std::move(cell));
    }
    try {
      parts.emplace_back(*degree, std::move(cells));
    } catch (Error const &e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree)
    throw Error(ErrorCode::ParseError, "line 1: missing 'degree n' header");
  return validate(std::move(parts));
}

std::string format_decomposition(CartesianDecomposition const &e)
{
  std::string out = "degree " + std::to_string(e.degree()) + "\n";
  for (auto const &p : e.partitions())
    out += p.to_string() + "\n";
  return out;
}

} // namespace cdecomp
