#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kroots/partition.hpp"

namespace kroots {

/// One compared quantity: lhs and rhs are computed by independent routes.
struct ReportRow {
  Partition cls;
  /// Extra key inside the class (a descent set, a tableau, ...); may be empty.
  std::string detail;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
};

/// Outcome of a verification sweep. Mismatches are recorded as failing rows,
/// never thrown.
struct Report {
  std::string check;
  int n = 0;
  std::optional<int> k;
  std::vector<ReportRow> rows;

  bool all_pass() const noexcept;
  void add(Partition cls, std::string detail, std::int64_t lhs, std::int64_t rhs);
  /// Stable sort by class, lexicographic on parts; rows sharing a class keep
  /// their generation order.
  void sort_rows();

  /// {"check", "n", "k"?, "rows": [{"class", "detail"?, "lhs", "rhs", "pass"}], "all_pass"}
  std::string to_json(int indent = -1) const;
};

/// A JSON array of reports.
std::string reports_to_json(std::span<const Report> reports, int indent = -1);

}  // namespace kroots
