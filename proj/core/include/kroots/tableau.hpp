#pragma once

#include <string>
#include <vector>

#include "kroots/descent_set.hpp"
#include "kroots/partition.hpp"

namespace kroots {

/// A standard Young tableau stored base row first (French convention):
/// rows()[0] is the longest row, rows()[r+1] sits on top of rows()[r].
/// Entries increase along rows and upward along columns.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws std::invalid_argument if the rows do not form a standard filling
  /// of a partition shape with entries exactly {1, ..., n}.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  const Partition& shape() const noexcept { return shape_; }
  int size() const noexcept { return shape_.size(); }
  /// Row index (0 = base row) holding `entry`.
  int row_of(int entry) const;

  /// JSON array of rows, base row first: "[[1,3,6],[2,4],[5]]".
  std::string to_json() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<int> row_of_;  // indexed by entry
};

/// Every SYT of the given shape, ordered lexicographically by the sequence
/// (row of 1, row of 2, ..., row of n).
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// {i : i+1 lies in a strictly higher row than i}.
DescentSet tableau_descents(const StandardTableau& t);

/// D(T) \ S(mu) meets each block as an initial interval mu_(i)+1 .. mu_(i)+l.
/// Throws std::invalid_argument if |mu| differs from the tableau size.
bool is_mu_unimodal_syt(const StandardTableau& t, const Partition& mu);

}  // namespace kroots
