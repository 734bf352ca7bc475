// Exhaustive-enumeration oracles. Nothing here touches the stabilizer chain:
// groups are closed under products by breadth-first search over elements.
#ifndef CDECOMP_TESTS_ORACLES_HPP
#define CDECOMP_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "cdecomp/perm.hpp"

namespace oracle
{

using cdecomp::Perm;
using cdecomp::Point;

using ElementSet = std::unordered_set<Perm, cdecomp::PermHash>;

inline Perm P(std::size_t n, std::string const &cycles)
{ return cdecomp::parse_cycles(cycles, n); }

/// All products of generators; throws if more than `limit` elements.
inline ElementSet closure(std::vector<Perm> const &gens, std::size_t n,
                          std::size_t limit = 200'000)
{
  ElementSet elems{Perm(n)};
  std::vector<Perm> queue{Perm(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &s : gens) {
      Perm y = queue[i] * s;
      if (elems.insert(y).second) {
        if (elems.size() > limit)
          throw std::runtime_error("oracle closure limit exceeded");
        queue.push_back(std::move(y));
      }
    }
  }
  return elems;
}

inline std::vector<Perm> filter(ElementSet const &elems, auto pred)
{
  std::vector<Perm> res;
  for (auto const &x : elems)
    if (pred(x))
      res.push_back(x);
  return res;
}

inline bool commutes_with_all(Perm const &x, std::vector<Perm> const &gens)
{
  return std::all_of(gens.begin(), gens.end(), [&](Perm const &s) { return x * s == s * x; });
}

/// Normal subgroup scan: the product closure of each conjugacy class is a
/// normal closure; the inclusion-minimal ones are returned.
inline std::vector<ElementSet> minimal_normals(std::vector<Perm> const &gens, std::size_t n)
{
  auto elems = closure(gens, n);
  std::vector<ElementSet> closures;
  ElementSet classified;
  for (auto const &x : elems) {
    if (x.is_identity() || classified.contains(x))
      continue;
    std::vector<Perm> queue{x};
    classified.insert(x);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto const &s : gens) {
        Perm y = queue[i].conjugate(s);
        if (classified.insert(y).second)
          queue.push_back(y);
      }
    // Normal closure: add conjugates as generators until the set is closed.
    std::vector<Perm> ngens{x};
    auto c = closure(ngens, n);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < ngens.size() && !grew; ++i)
        for (auto const &s : gens) {
          Perm y = ngens[i].conjugate(s);
          if (!c.contains(y)) {
            ngens.push_back(std::move(y));
            c = closure(ngens, n);
            grew = true;
            break;
          }
        }
    }
    if (std::none_of(closures.begin(), closures.end(), [&](auto const &d) { return d == c; }))
      closures.push_back(std::move(c));
  }
  std::vector<ElementSet> minimal;
  for (auto const &c : closures) {
    bool is_min = std::none_of(closures.begin(), closures.end(), [&](auto const &d) {
      return d.size() < c.size() && std::all_of(d.begin(), d.end(), [&](Perm const &y) { return c.contains(y); });
    });
    if (is_min)
      minimal.push_back(c);
  }
  return minimal;
}

/// Orbit of point 0 under the elements of a set, by direct image.
inline bool transitive(ElementSet const &elems, std::size_t n)
{
  std::vector<char> hit(n, 0);
  for (auto const &x : elems)
    hit[x[0]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

/// Number of non-trivial invariant partitions, over all set partitions of
/// the n points (restricted growth strings; n <= 9).
inline std::size_t count_block_systems(std::vector<Perm> const &gens, std::size_t n)
{
  std::vector<std::size_t> label(n, 0);
  std::size_t count = 0;
  auto check = [&](std::size_t blocks) {
    if (blocks == 1 || blocks == n)
      return;
    for (auto const &s : gens) {
      // The image of every block must be a block: labels map consistently.
      std::vector<std::size_t> map(n, n);
      for (Point x = 0; x < n; ++x) {
        auto &m = map[label[x]];
        if (m == n)
          m = label[s[x]];
        else if (m != label[s[x]])
          return;
      }
    }
    ++count;
  };
  auto rec = [&](auto &&self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      check(blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0)
    rec(rec, 1, 1);
  return count;
}

inline Perm random_perm(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i)
    img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

/// Random permutation of a random subset of points: keeps orders small.
inline Perm random_sparse_perm(std::size_t n, std::size_t moved, std::mt19937_64 &rng)
{
  std::vector<Point> pts(n);
  for (Point i = 0; i < n; ++i)
    pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(std::min(moved, n));
  std::vector<Point> shuffled = pts;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i)
    img[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = shuffled[i];
  return Perm(std::move(img));
}

} // namespace oracle

#endif
