#include "cdecomp/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "cdecomp/error.hpp"

namespace cdecomp
{

namespace
{

std::atomic<std::uint64_t> global_seed{0x5eed'c0de'2024ull};

class UnionFind
{
public:
  explicit UnionFind(std::size_t n)
  : _parent(n)
  { std::iota(_parent.begin(), _parent.end(), Point{0}); }

  Point find(Point x)
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  // Returns the absorbed root, or the common root if already merged.
  std::pair<Point, Point> unite(Point a, Point b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return {a, a};
    if (b < a)
      std::swap(a, b);
    _parent[b] = a;
    return {b, a};
  }

private:
  std::vector<Point> _parent;
};

std::vector<std::size_t> block_labels(PermGroup const &g, std::span<Point const> seed)
{
  std::size_t n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> queue;

  for (std::size_t i = 1; i < seed.size(); ++i) {
    auto [absorbed, root] = uf.unite(seed[0], seed[i]);
    if (absorbed != root)
      queue.emplace_back(absorbed, root);
  }

  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (auto const &s : g.generators()) {
      auto [absorbed, root] = uf.unite(s[x], s[y]);
      if (absorbed != root)
        queue.emplace_back(absorbed, root);
    }
  }

  std::vector<std::size_t> labels(n);
  for (Point x = 0; x < n; ++x)
    labels[x] = uf.find(x);
  return labels;
}

std::vector<Point> suborbit_representatives(PermGroup const &g, Point p)
{
  auto stab = point_stabilizer(g, p);
  std::vector<Point> reps;
  for (auto const &o : orbits(stab))
    reps.push_back(o.front());
  return reps;
}

void require_transitive(PermGroup const &g, char const *what)
{
  if (!is_transitive(g))
    throw Error(ErrorCode::NotTransitive, std::string(what) + " requires a transitive group");
}

} // namespace

void set_random_seed(std::uint64_t seed)
{ global_seed = seed; }

std::uint64_t random_seed()
{ return global_seed; }

std::mt19937_64 make_rng(std::uint64_t salt)
{
  std::seed_seq seq{global_seed.load(), salt};
  return std::mt19937_64(seq);
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
: _degree(degree)
{
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) +
                  " in group of degree " + std::to_string(degree));
    if (!g.is_identity() && std::find(_gens.begin(), _gens.end(), g) == _gens.end())
      _gens.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, StabChain chain)
: PermGroup(degree, std::move(generators))
{
  _chain = std::make_shared<StabChain const>(std::move(chain));
}

StabChain const &PermGroup::chain() const
{
  if (!_chain)
    _chain = std::make_shared<StabChain const>(StabChain::build(_degree, _gens));
  return *_chain;
}

StabChain PermGroup::chain_with_base(std::span<Point const> prefix) const
{ return StabChain::build(_degree, _gens, prefix); }

bool PermGroup::is_trivial() const
{ return _gens.empty(); }

bool PermGroup::contains(Perm const &x) const
{
  if (x.degree() != _degree)
    throw Error(ErrorCode::DegreeMismatch, "membership test with mismatched degree");
  if (_gens.empty())
    return x.is_identity();
  return chain().contains(x);
}

bool PermGroup::contains(PermGroup const &h) const
{
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [this](Perm const &x) { return contains(x); });
}

PermGroup PermGroup::with_generators(std::span<Perm const> extra) const
{
  std::vector<Perm> gens = _gens;
  gens.insert(gens.end(), extra.begin(), extra.end());
  StabChain c = chain();
  c.add_generators(extra);
  return PermGroup(_degree, std::move(gens), std::move(c));
}

bool same_group(PermGroup const &a, PermGroup const &b)
{
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

std::vector<Point> orbit_of(std::span<Perm const> gens, std::size_t degree, Point p)
{
  if (p >= degree)
    throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(p) + " out of range");
  std::vector<bool> seen(degree, false);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (auto const &s : gens) {
      Point q = s[orb[i]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<Point> orbit(PermGroup const &g, Point p)
{ return orbit_of(g.generators(), g.degree(), p); }

std::vector<std::vector<Point>> orbits(PermGroup const &g)
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(g.degree(), false);
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x])
      continue;
    auto o = orbit(g, x);
    for (Point y : o)
      seen[y] = true;
    res.push_back(std::move(o));
  }
  return res;
}

PermGroup point_stabilizer(PermGroup const &g, Point p)
{
  if (p >= g.degree())
    throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(p) + " out of range");
  Point prefix[] = {p};
  auto c = g.chain_with_base(prefix);
  return PermGroup(g.degree(), c.stabilizer_generators(1));
}

PermGroup pointwise_stabilizer(PermGroup const &g, std::span<Point const> points)
{
  std::vector<Point> prefix;
  for (Point p : points) {
    if (std::find(prefix.begin(), prefix.end(), p) == prefix.end())
      prefix.push_back(p);
  }
  auto c = g.chain_with_base(prefix);
  return PermGroup(g.degree(), c.stabilizer_generators(prefix.size()));
}

PermGroup backtrack_subgroup(
  PermGroup const &g, std::span<Point const> base_prefix,
  std::function<bool(std::size_t, std::span<Point const>, std::span<Point const>)> const &accept_image,
  std::function<bool(Perm const &)> const &accept)
{
  auto chain = g.chain_with_base(base_prefix);
  auto base = chain.base();
  std::size_t depth = chain.depth();

  // Levels whose transversals are all trivial need no branching.
  std::vector<std::vector<Perm>> trans(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    for (std::size_t p = 0; p < chain.level(i).orbit.size(); ++p)
      trans[i].push_back(chain.transversal(i, p));
  }

  PermGroup found(g.degree());
  std::vector<Point> images;

  std::function<void(std::size_t, Perm const &)> dfs = [&](std::size_t level, Perm const &w) {
    if (level == depth) {
      if (!w.is_identity() && accept(w) && !found.contains(w)) {
        Perm gens[] = {w};
        found = found.with_generators(gens);
      }
      return;
    }
    auto const &orb = chain.level(level).orbit;
    for (std::size_t p = 0; p < orb.size(); ++p) {
      images.push_back(w[orb[p]]);
      if (accept_image(level, std::span(base).first(level + 1), images))
        dfs(level + 1, trans[level][p] * w);
      images.pop_back();
    }
  };
  dfs(0, Perm(g.degree()));
  return found;
}

PermGroup setwise_stabilizer(PermGroup const &g, std::span<Point const> set)
{
  std::vector<bool> in_set(g.degree(), false);
  for (Point p : set) {
    if (p >= g.degree())
      throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(p) + " out of range");
    in_set[p] = true;
  }

  auto preserves = [&](Perm const &x) {
    return std::all_of(set.begin(), set.end(), [&](Point p) { return in_set[x[p]]; });
  };

  if (g.order() <= 100'000 && g.order() * g.degree() <= 50'000'000ull) {
    std::vector<Perm> keep;
    for (auto &x : g.elements())
      if (preserves(x))
        keep.push_back(std::move(x));
    return PermGroup(g.degree(), std::move(keep));
  }

  std::vector<Point> prefix(set.begin(), set.end());
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  return backtrack_subgroup(
    g, prefix,
    [&](std::size_t level, std::span<Point const> bases, std::span<Point const> imgs) {
      return in_set[bases[level]] == in_set[imgs[level]];
    },
    preserves);
}

bool is_transitive(PermGroup const &g)
{
  if (g.degree() == 0)
    return false;
  return orbit(g, 0).size() == g.degree();
}

bool is_regular(PermGroup const &g)
{ return is_transitive(g) && g.order() == g.degree(); }

bool is_semiregular(PermGroup const &g)
{
  auto ord = g.order();
  for (auto const &o : orbits(g)) {
    if (o.size() != ord)
      return false;
  }
  return true;
}

bool is_abelian(PermGroup const &g)
{
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

Partition minimal_block_system(PermGroup const &g, std::span<Point const> seed)
{
  if (seed.empty())
    throw Error(ErrorCode::Precondition, "minimal block needs at least one seed point");
  for (Point p : seed) {
    if (p >= g.degree())
      throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(p) + " out of range");
  }
  return Partition::from_labels(block_labels(g, seed));
}

std::vector<Partition> minimal_block_systems(PermGroup const &g)
{
  require_transitive(g, "minimal_block_systems");

  std::vector<Partition> candidates;
  for (Point w : suborbit_representatives(g, 0)) {
    if (w == 0)
      continue;
    Point seed[] = {0, w};
    auto sys = minimal_block_system(g, seed);
    if (sys.size() > 1 && std::find(candidates.begin(), candidates.end(), sys) == candidates.end())
      candidates.push_back(std::move(sys));
  }

  // A system is minimal iff the block through 0 contains no other candidate block.
  std::vector<Partition> res;
  for (auto const &a : candidates) {
    auto const &block_a = a.cell(a.cell_of(0));
    bool minimal = true;
    for (auto const &b : candidates) {
      if (&a == &b)
        continue;
      auto const &block_b = b.cell(b.cell_of(0));
      if (block_b.size() < block_a.size() &&
          std::includes(block_a.begin(), block_a.end(), block_b.begin(), block_b.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      res.push_back(a);
  }
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<Partition> all_block_systems(PermGroup const &g)
{
  require_transitive(g, "all_block_systems");

  auto reps = suborbit_representatives(g, 0);
  std::set<Partition> found;
  std::vector<Partition> frontier;

  auto consider = [&](std::vector<Point> const &seed) {
    auto sys = minimal_block_system(g, seed);
    if (sys.size() > 1 && found.insert(sys).second)
      frontier.push_back(sys);
  };

  for (Point w : reps) {
    if (w != 0)
      consider({0, w});
  }
  while (!frontier.empty()) {
    auto sys = std::move(frontier.back());
    frontier.pop_back();
    auto const &block = sys.cell(sys.cell_of(0));
    for (Point w : reps) {
      if (std::binary_search(block.begin(), block.end(), w))
        continue;
      std::vector<Point> seed = block;
      seed.push_back(w);
      consider(seed);
    }
  }
  return {found.begin(), found.end()};
}

PermGroup action_stabilizer(PermGroup const &g, std::span<Perm const> action_images,
                            std::size_t action_degree, std::span<Point const> fixed)
{
  auto gens = g.generators();
  if (action_images.size() != gens.size())
    throw Error(ErrorCode::Precondition, "one action image per generator required");

  std::size_t n = g.degree();
  std::vector<Perm> doubled;
  doubled.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (action_images[i].degree() != action_degree)
      throw Error(ErrorCode::DegreeMismatch, "action image of wrong degree");
    std::vector<Point> img(n + action_degree);
    for (Point x = 0; x < n; ++x)
      img[x] = gens[i][x];
    for (Point y = 0; y < action_degree; ++y)
      img[n + y] = static_cast<Point>(n + action_images[i][y]);
    doubled.emplace_back(std::move(img));
  }

  std::vector<Point> prefix;
  for (Point y : fixed) {
    Point p = static_cast<Point>(n + y);
    if (std::find(prefix.begin(), prefix.end(), p) == prefix.end())
      prefix.push_back(p);
  }

  auto chain = StabChain::build(n + action_degree, doubled, prefix);
  std::vector<Perm> restricted;
  for (auto const &s : chain.stabilizer_generators(prefix.size())) {
    auto imgs = s.images();
    restricted.emplace_back(std::vector<Point>(imgs.begin(), imgs.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  return PermGroup(n, std::move(restricted));
}

PermGroup action_image(std::span<Perm const> action_images, std::size_t action_degree)
{ return PermGroup(action_degree, std::vector<Perm>(action_images.begin(), action_images.end())); }

namespace
{

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

std::size_t parse_degree_line(std::string const &line, std::size_t line_no)
{
  std::istringstream ss(line);
  std::string word;
  long long n = -1;
  std::string rest;
  if (!(ss >> word) || word != "degree" || !(ss >> n) || (ss >> rest) || n < 1)
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": expected 'degree n' with n >= 1");
  return static_cast<std::size_t>(n);
}

PermGroup parse_generators(std::istream &in)
{
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    if (!degree) {
      degree = parse_degree_line(t, line_no);
      continue;
    }
    try {
      gens.push_back(parse_cycles(t, *degree));
    } catch (Error const &e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree)
    throw Error(ErrorCode::ParseError, "line 1: missing 'degree n' header");
  return PermGroup(*degree, std::move(gens));
}

std::string format_generators(PermGroup const &g)
{
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (auto const &s : g.generators())
    out += s.to_cycle_string() + "\n";
  if (g.generators().empty())
    out += "()\n";
  return out;
}

} // namespace cdecomp
