#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kroots/descent_set.hpp"

namespace kroots {

struct Cell {
  int row;  // 0 = lowest row (French convention)
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A zigzag (ribbon) skew shape with its reading order.
///
/// Cell i+1 sits directly below cell i when i is a descent position and
/// directly to the right of it otherwise. Rows are numbered from the bottom,
/// so the cell holding reading position 1 is in the top row.
class RibbonShape {
 public:
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const DescentSet& descent_positions() const noexcept { return descents_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }

  /// Row lengths from the top row down, e.g. {1,3,1,3} for J = {1,4,5}, n = 8.
  std::vector<int> row_lengths_top_down() const;
  /// One line per row, top row first; '.' pads the columns left of a row.
  std::string render() const;

 private:
  friend RibbonShape zigzag_shape(const DescentSet& descents, int n);
  std::vector<Cell> cells_;
  DescentSet descents_;
};

/// Throws std::invalid_argument if J is not a subset of {1, ..., n-1}.
RibbonShape zigzag_shape(const DescentSet& descents, int n);

/// Number of standard fillings: entries 1..n increase left to right along
/// rows and upward along columns.
std::uint64_t count_ribbon_fillings(const RibbonShape& shape);

}  // namespace kroots
