#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kroots {

/// A subset of {1, ..., n-1}, stored as a bitmask (bit i set <=> i is a descent).
class DescentSet {
 public:
  static constexpr int kMaxSize = 32;

  DescentSet() = default;
  /// Empty set with ambient size n.
  explicit DescentSet(int n);
  /// Throws std::invalid_argument if a position lies outside {1, ..., n-1}.
  DescentSet(int n, const std::vector<int>& positions);

  static DescentSet from_mask(int n, std::uint32_t mask);

  int ambient_size() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return mask_; }

  bool contains(int position) const noexcept;
  void insert(int position);
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  std::vector<int> positions() const;

  /// "1,4,5"; the empty set renders as "".
  std::string to_string() const;

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// Parses "1,4,5" (or "" for the empty set) against ambient size n.
DescentSet parse_descent_set(std::string_view text, int n);

}  // namespace kroots
