#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kroots/descent_set.hpp"

namespace kroots {

/// Weakly decreasing sequence of positive integers. Used both as a cycle type
/// and as a Young diagram shape.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into decreasing order.
  static Partition from_unsorted(std::vector<int> parts);
  /// (1, 1, ..., 1) of size n.
  static Partition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  /// Number of parts equal to `part`.
  int multiplicity(int part) const noexcept;
  bool all_parts_divide(int k) const noexcept;

  /// "4,3,1"
  std::string to_string() const;

  // Lexicographic order on the part sequences.
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

Partition parse_partition(std::string_view text);

/// Every partition of n, in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// The partial sums mu_(1) < ... < mu_(t) = n of a partition.
class PrefixMarkers {
 public:
  explicit PrefixMarkers(const Partition& mu);

  const std::vector<int>& marks() const noexcept { return marks_; }
  int size() const noexcept { return marks_.empty() ? 0 : marks_.back(); }
  bool contains(int position) const noexcept;
  /// The same set as a DescentSet over {1, ..., n-1}; the final mark n is dropped.
  DescentSet as_set() const;

 private:
  std::vector<int> marks_;
};

PrefixMarkers prefix_markers(const Partition& mu);

/// Order of the centralizer of a permutation of cycle type lambda:
/// prod_i i^{k_i} * k_i!, with k_i the multiplicity of part i.
std::uint64_t centralizer_order(const Partition& lambda);
/// |C_lambda| = n! / z_lambda.
std::uint64_t class_size(const Partition& lambda);
std::uint64_t factorial(int n);

/// |D \ S(mu)|.
int count_outside_markers(const DescentSet& descents, const Partition& mu);

/// True iff, inside every block (mu_(i), mu_(i+1)], the descents at interior
/// positions mu_(i)+1 .. mu_(i+1)-1 form an initial run starting at mu_(i)+1.
/// Shared by the permutation and tableau unimodality tests.
bool descents_form_block_prefixes(const DescentSet& descents, const Partition& mu);

}  // namespace kroots
