#include "kroots/ribbon.hpp"

#include <algorithm>
#include <stdexcept>

namespace kroots {

RibbonShape zigzag_shape(const DescentSet& descents, int n) {
  if (n < 1) throw std::invalid_argument("zigzag_shape requires n >= 1");
  // Throws if a position is outside {1..n-1}.
  const DescentSet j(n, descents.positions());

  RibbonShape shape;
  shape.descents_ = j;
  int row = 0;
  int col = 0;
  shape.cells_.push_back({row, col});
  for (int i = 1; i < n; ++i) {
    if (j.contains(i)) {
      --row;
    } else {
      ++col;
    }
    shape.cells_.push_back({row, col});
  }
  const int lowest = row;
  for (auto& c : shape.cells_) c.row -= lowest;
  return shape;
}

std::vector<int> RibbonShape::row_lengths_top_down() const {
  std::vector<int> lengths;
  int current_row = -1;
  for (const auto& c : cells_) {
    if (lengths.empty() || c.row != current_row) {
      lengths.push_back(0);
      current_row = c.row;
    }
    ++lengths.back();
  }
  return lengths;
}

std::string RibbonShape::render() const {
  std::string out;
  std::size_t i = 0;
  while (i < cells_.size()) {
    const int row = cells_[i].row;
    std::string line(static_cast<std::size_t>(cells_[i].col), '.');
    for (; i < cells_.size() && cells_[i].row == row; ++i) line += '#';
    out += line + '\n';
  }
  return out;
}

std::uint64_t count_ribbon_fillings(const RibbonShape& shape) {
  const auto& cells = shape.cells();
  if (cells.empty()) return 1;
  // ways[r]: fillings of the first m cells, restricted to relative order,
  // in which the last cell holds the r-th smallest value.
  std::vector<std::uint64_t> ways{1};
  for (std::size_t m = 1; m < cells.size(); ++m) {
    const bool right_step = cells[m].row == cells[m - 1].row;
    if (!right_step && !(cells[m].row == cells[m - 1].row - 1 && cells[m].col == cells[m - 1].col)) {
      throw std::invalid_argument("ribbon cells are not edge-connected");
    }
    std::vector<std::uint64_t> next(m + 1, 0);
    for (std::size_t r = 0; r <= m; ++r) {
      if (right_step) {
        for (std::size_t q = 0; q < r; ++q) next[r] += ways[q];
      } else {
        for (std::size_t q = r; q < m; ++q) next[r] += ways[q];
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

}  // namespace kroots
