#include "cdecomp/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cdecomp/error.hpp"

namespace cdecomp
{

Partition::Partition(std::size_t degree, std::vector<std::vector<Point>> cells)
: _cells(std::move(cells))
{
  constexpr auto unset = static_cast<std::size_t>(-1);
  _cell_of.assign(degree, unset);

  std::erase_if(_cells, [](auto const &c) { return c.empty(); });
  for (auto &c : _cells)
    std::sort(c.begin(), c.end());
  std::sort(_cells.begin(), _cells.end(),
            [](auto const &a, auto const &b) { return a.front() < b.front(); });

  for (std::size_t i = 0; i < _cells.size(); ++i) {
    for (Point x : _cells[i]) {
      if (x >= degree)
        throw Error(ErrorCode::InvalidPoint,
                    "cell point " + std::to_string(x) + " exceeds degree " + std::to_string(degree));
      if (_cell_of[x] != unset)
        throw Error(ErrorCode::InvalidSpec, "point " + std::to_string(x) + " lies in two cells");
      _cell_of[x] = i;
    }
  }
  for (Point x = 0; x < degree; ++x) {
    if (_cell_of[x] == unset)
      throw Error(ErrorCode::InvalidSpec, "point " + std::to_string(x) + " lies in no cell");
  }
}

Partition Partition::from_labels(std::vector<std::size_t> const &labels)
{
  std::map<std::size_t, std::vector<Point>> by_label;
  for (Point x = 0; x < labels.size(); ++x)
    by_label[labels[x]].push_back(x);

  std::vector<std::vector<Point>> cells;
  cells.reserve(by_label.size());
  for (auto &[label, cell] : by_label)
    cells.push_back(std::move(cell));
  return Partition(labels.size(), std::move(cells));
}

bool Partition::is_proper() const noexcept
{
  if (_cells.size() < 2)
    return false;
  return std::any_of(_cells.begin(), _cells.end(),
                     [](auto const &c) { return c.size() >= 2; });
}

Partition Partition::image(Perm const &g) const
{
  std::vector<std::vector<Point>> cells;
  cells.reserve(_cells.size());
  for (auto const &c : _cells) {
    std::vector<Point> img;
    img.reserve(c.size());
    for (Point x : c)
      img.push_back(g[x]);
    cells.push_back(std::move(img));
  }
  return Partition(degree(), std::move(cells));
}

bool Partition::preserved_by(Perm const &g) const
{
  for (auto const &c : _cells) {
    std::size_t target = _cell_of[g[c.front()]];
    for (Point x : c) {
      if (_cell_of[g[x]] != target)
        return false;
    }
  }
  return true;
}

Perm Partition::cell_action(Perm const &g) const
{
  std::vector<Point> images(_cells.size());
  for (std::size_t i = 0; i < _cells.size(); ++i)
    images[i] = static_cast<Point>(_cell_of[g[_cells[i].front()]]);
  return Perm(std::move(images));
}

std::string Partition::to_string() const
{
  std::ostringstream ss;
  for (auto const &c : _cells) {
    ss << '{';
    for (std::size_t i = 0; i < c.size(); ++i)
      ss << (i ? " " : "") << c[i];
    ss << '}';
  }
  return ss.str();
}

} // namespace cdecomp
