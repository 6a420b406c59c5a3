#include "kroots/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "text.hpp"

namespace kroots {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::all_parts_divide(int k) const noexcept {
  // Every positive integer divides 0.
  return std::all_of(parts_.begin(), parts_.end(), [k](int p) { return k % p == 0; });
}

std::string Partition::to_string() const { return detail::join(parts_); }

Partition parse_partition(std::string_view text) {
  auto parts = detail::parse_int_list(text, "partition");
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

PrefixMarkers::PrefixMarkers(const Partition& mu) {
  int sum = 0;
  for (int part : mu.parts()) {
    sum += part;
    marks_.push_back(sum);
  }
}

bool PrefixMarkers::contains(int position) const noexcept {
  return std::binary_search(marks_.begin(), marks_.end(), position);
}

DescentSet PrefixMarkers::as_set() const {
  DescentSet s(size());
  for (int m : marks_) {
    if (m < size()) s.insert(m);
  }
  return s;
}

PrefixMarkers prefix_markers(const Partition& mu) { return PrefixMarkers(mu); }

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t centralizer_order(const Partition& lambda) {
  std::uint64_t z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int r = 0; r < mult; ++r) z *= static_cast<std::uint64_t>(parts[i]);
    z *= factorial(mult);
    i = j;
  }
  return z;
}

std::uint64_t class_size(const Partition& lambda) {
  return factorial(lambda.size()) / centralizer_order(lambda);
}

int count_outside_markers(const DescentSet& descents, const Partition& mu) {
  if (descents.ambient_size() != mu.size()) {
    throw std::invalid_argument("descent set and partition sizes differ");
  }
  return DescentSet::from_mask(mu.size(), descents.mask() & ~prefix_markers(mu).as_set().mask())
      .size();
}

bool descents_form_block_prefixes(const DescentSet& descents, const Partition& mu) {
  if (descents.ambient_size() != mu.size()) {
    throw std::invalid_argument("descent set and partition sizes differ");
  }
  int block_start = 0;  // mu_(i)
  for (int part : mu.parts()) {
    const int block_end = block_start + part;  // mu_(i+1)
    int pos = block_start + 1;
    while (pos < block_end && descents.contains(pos)) ++pos;
    for (; pos < block_end; ++pos) {
      if (descents.contains(pos)) return false;
    }
    block_start = block_end;
  }
  return true;
}

}  // namespace kroots
