#include "cdecomp/stab_chain.hpp"

#include <algorithm>
#include <limits>

#include "cdecomp/error.hpp"

namespace cdecomp
{

StabChain StabChain::build(std::size_t degree, std::span<Perm const> gens,
                           std::span<Point const> base_prefix)
{
  StabChain chain;
  chain._degree = degree;

  for (Point b : base_prefix) {
    if (b >= degree)
      throw Error(ErrorCode::InvalidPoint, "base point " + std::to_string(b) + " out of range");
    bool dup = std::any_of(chain._levels.begin(), chain._levels.end(),
                           [b](Level const &l) { return l.base == b; });
    if (dup)
      continue;
    Level level;
    level.base = b;
    level.pos.assign(degree, -1);
    level.pos[b] = 0;
    level.orbit.push_back(b);
    level.inv_transversal.emplace_back(degree);
    level.done.push_back(0);
    chain._levels.push_back(std::move(level));
  }

  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
    if (g.is_identity())
      continue;
    std::size_t j = 0;
    while (j < chain._levels.size() && g[chain._levels[j].base] == chain._levels[j].base)
      ++j;
    chain.add_strong(g, 0, j);
  }

  chain.complete();
  return chain;
}

void StabChain::add_generators(std::span<Perm const> gens)
{
  bool added = false;
  for (auto const &g : gens) {
    if (g.degree() != _degree)
      throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
    auto [res, j] = sift(g);
    if (res.is_identity())
      continue;
    // The generator itself (not the residue) keeps level 0 generating the group.
    std::size_t k = 0;
    while (k < _levels.size() && g[_levels[k].base] == _levels[k].base)
      ++k;
    add_strong(g, 0, k);
    added = true;
  }
  if (added)
    complete();
}

void StabChain::add_strong(Perm g, std::size_t first_level, std::size_t last_level)
{
  if (last_level == _levels.size()) {
    Level level;
    level.base = g.first_moved();
    level.pos.assign(_degree, -1);
    level.pos[level.base] = 0;
    level.orbit.push_back(level.base);
    level.inv_transversal.emplace_back(_degree);
    level.done.push_back(0);
    _levels.push_back(std::move(level));
  }

  auto idx = static_cast<std::uint32_t>(_strong.size());
  _strong_inv.push_back(g.inverse());
  _strong.push_back(std::move(g));

  for (std::size_t i = first_level; i <= last_level; ++i) {
    auto first_new = _levels[i].gens.size();
    _levels[i].gens.push_back(idx);
    extend_orbit(i, first_new);
  }
}

void StabChain::extend_orbit(std::size_t li, std::size_t first_new_gen)
{
  Level &level = _levels[li];

  auto try_add = [&](std::size_t p_idx, std::uint32_t gen) {
    Point q = _strong[gen][level.orbit[p_idx]];
    if (level.pos[q] >= 0)
      return;
    level.pos[q] = static_cast<std::int32_t>(level.orbit.size());
    level.orbit.push_back(q);

    auto const &inv_p = level.inv_transversal[p_idx].images();
    auto const &sinv = _strong_inv[gen].images();
    std::vector<Point> inv_q(_degree);
    for (Point x = 0; x < _degree; ++x)
      inv_q[x] = inv_p[sinv[x]];
    level.inv_transversal.emplace_back(std::move(inv_q));
    level.done.push_back(0);
  };

  std::size_t old = level.orbit.size();
  for (std::size_t p = 0; p < old; ++p) {
    for (std::size_t gi = first_new_gen; gi < level.gens.size(); ++gi)
      try_add(p, level.gens[gi]);
  }
  for (std::size_t p = old; p < level.orbit.size(); ++p) {
    for (std::size_t gi = 0; gi < level.gens.size(); ++gi)
      try_add(p, level.gens[gi]);
  }
}

void StabChain::complete()
{
  std::vector<Point> up(_degree);
  std::vector<Point> buf(_degree);

  for (;;) {
    // Deepest level with unprocessed Schreier pairs first.
    std::size_t li = _levels.size();
    for (std::size_t i = _levels.size(); i-- > 0;) {
      auto const &l = _levels[i];
      bool pending = std::any_of(l.done.begin(), l.done.end(),
                                 [&](std::uint32_t d) { return d < l.gens.size(); });
      if (pending) {
        li = i;
        break;
      }
    }
    if (li == _levels.size())
      return;

    bool restart = false;
    for (std::size_t p = 0; p < _levels[li].orbit.size() && !restart; ++p) {
      Level &level = _levels[li];
      if (level.done[p] >= level.gens.size())
        continue;

      auto const &inv_p = level.inv_transversal[p].images();
      for (Point x = 0; x < _degree; ++x)
        up[inv_p[x]] = x;

      while (level.done[p] < level.gens.size()) {
        std::uint32_t gen = level.gens[level.done[p]];
        ++level.done[p];

        auto const &s = _strong[gen].images();
        Point q = s[level.orbit[p]];
        auto const &inv_q = level.inv_transversal[level.pos[q]].images();

        bool ident = true;
        for (Point x = 0; x < _degree; ++x) {
          buf[x] = inv_q[s[up[x]]];
          ident = ident && buf[x] == x;
        }
        if (ident)
          continue;

        auto [res, j] = sift(Perm(std::vector<Point>(buf)), li + 1);
        if (!res.is_identity()) {
          add_strong(std::move(res), li + 1, j);
          restart = true;
          break;
        }
      }
    }
  }
}

std::vector<Point> StabChain::base() const
{
  std::vector<Point> b;
  b.reserve(_levels.size());
  for (auto const &l : _levels)
    b.push_back(l.base);
  return b;
}

std::uint64_t StabChain::order() const
{
  std::uint64_t ord = 1;
  for (auto const &l : _levels) {
    std::uint64_t s = l.orbit.size();
    if (ord > std::numeric_limits<std::uint64_t>::max() / s)
      throw Error(ErrorCode::LimitExceeded, "group order exceeds 64 bits");
    ord *= s;
  }
  return ord;
}

std::pair<Perm, std::size_t> StabChain::sift(Perm const &x, std::size_t from_level) const
{
  Perm g = x;
  for (std::size_t k = from_level; k < _levels.size(); ++k) {
    auto const &l = _levels[k];
    std::int32_t p = l.pos[g[l.base]];
    if (p < 0)
      return {std::move(g), k};
    if (p > 0)
      g *= l.inv_transversal[static_cast<std::size_t>(p)];
  }
  return {std::move(g), _levels.size()};
}

bool StabChain::contains(Perm const &x) const
{
  if (x.degree() != _degree)
    throw Error(ErrorCode::DegreeMismatch, "membership test with mismatched degree");
  return sift(x).first.is_identity();
}

std::vector<Perm> StabChain::stabilizer_generators(std::size_t i) const
{
  std::vector<Perm> res;
  if (i >= _levels.size())
    return res;
  for (auto idx : _levels[i].gens)
    res.push_back(_strong[idx]);
  return res;
}

Perm StabChain::random_element(std::mt19937_64 &rng) const
{
  Perm e(_degree);
  for (std::size_t k = _levels.size(); k-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, _levels[k].orbit.size() - 1);
    e *= transversal(k, pick(rng));
  }
  return e;
}

std::vector<Perm> StabChain::elements(std::uint64_t limit) const
{
  if (order() > limit)
    throw Error(ErrorCode::LimitExceeded,
                "element enumeration of order " + std::to_string(order()) +
                " exceeds limit " + std::to_string(limit));

  std::vector<Perm> elems{Perm(_degree)};
  for (std::size_t k = _levels.size(); k-- > 0;) {
    auto const &l = _levels[k];
    std::vector<Perm> trans;
    trans.reserve(l.orbit.size());
    for (std::size_t p = 0; p < l.orbit.size(); ++p)
      trans.push_back(transversal(k, p));

    std::vector<Perm> next;
    next.reserve(elems.size() * trans.size());
    for (auto const &e : elems) {
      for (auto const &u : trans)
        next.push_back(e * u);
    }
    elems = std::move(next);
  }
  return elems;
}

void StabChain::for_each_element(std::function<void(Perm const &)> const &fn) const
{
  std::vector<std::vector<Perm>> trans(_levels.size());
  for (std::size_t k = 0; k < _levels.size(); ++k) {
    for (std::size_t p = 0; p < _levels[k].orbit.size(); ++p)
      trans[k].push_back(transversal(k, p));
  }
  std::function<void(std::size_t, Perm const &)> rec = [&](std::size_t k, Perm const &e) {
    if (k == 0) {
      fn(e);
      return;
    }
    for (auto const &u : trans[k - 1])
      rec(k - 1, e * u);
  };
  rec(_levels.size(), Perm(_degree));
}

} // namespace cdecomp
