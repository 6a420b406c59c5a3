#include "kroots/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text.hpp"

namespace kroots {

Permutation::Permutation(std::span<const int> word) {
  const auto n = static_cast<int>(word.size());
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("permutation size must be in 1.." + std::to_string(kMaxDegree));
  }
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = word[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("word is not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    data_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::span<const int>(word.begin(), word.size())) {}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("identity size out of range");
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.data_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

std::vector<int> Permutation::word() const {
  std::vector<int> w(n_);
  for (int i = 0; i < n_; ++i) w[static_cast<std::size_t>(i)] = data_[static_cast<std::size_t>(i)] + 1;
  return w;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (data_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::key() const noexcept {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= std::uint64_t{data_[static_cast<std::size_t>(i)]} << (4 * i);
  return k;
}

std::string Permutation::to_string() const { return detail::join(word()); }

Permutation parse_permutation(std::string_view text) {
  text = detail::trim(text);
  std::vector<int> word;
  const bool digits_only =
      !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (digits_only && text.size() > 1) {
    if (text.size() > 9) {
      throw std::invalid_argument("digits-only permutation shorthand requires n <= 9");
    }
    for (char c : text) word.push_back(c - '0');
  } else {
    word = detail::parse_int_list(text, "permutation");
  }
  return Permutation(word);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n_ != q.n_) throw std::invalid_argument("compose: permutation sizes differ");
  Permutation r;
  r.n_ = p.n_;
  for (int i = 0; i < p.n_; ++i) {
    r.data_[static_cast<std::size_t>(i)] = p.data_[q.data_[static_cast<std::size_t>(i)]];
  }
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.n_ = p.n_;
  for (int i = 0; i < p.n_; ++i) {
    r.data_[p.data_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  }
  return r;
}

Permutation power(const Permutation& p, std::uint64_t k) {
  // Rotate each cycle by k mod its length.
  Permutation r;
  r.n_ = p.n_;
  std::array<bool, kMaxDegree> visited{};
  std::array<std::uint8_t, kMaxDegree> cycle{};
  for (int start = 0; start < p.n_; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::size_t len = 0;
    for (auto x = static_cast<std::uint8_t>(start); !visited[x]; x = p.data_[x]) {
      visited[x] = true;
      cycle[len++] = x;
    }
    const std::size_t shift = static_cast<std::size_t>(k % len);
    for (std::size_t j = 0; j < len; ++j) r.data_[cycle[j]] = cycle[(j + shift) % len];
  }
  return r;
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(inverse(x), compose(g, x));
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(static_cast<std::size_t>(p.size()) + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    auto& c = out.emplace_back();
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = p(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
  }
  return out;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycles(p)) lengths.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lengths));
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t l = 1;
  const auto type = cycle_type(p);
  for (int part : type.parts()) l = std::lcm(l, static_cast<std::uint64_t>(part));
  return l;
}

DescentSet descent_set(const Permutation& p) {
  DescentSet d(p.size());
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) d.insert(i);
  }
  return d;
}

namespace {

void require_same_size(const Permutation& p, const Partition& mu) {
  if (p.size() != mu.size()) {
    throw std::invalid_argument("permutation of size " + std::to_string(p.size()) +
                                " paired with partition of " + std::to_string(mu.size()));
  }
}

}  // namespace

bool is_mu_unimodal(const Permutation& p, const Partition& mu) {
  require_same_size(p, mu);
  // Decreasing-then-increasing within a block means the block's internal
  // descents are exactly an initial run.
  return descents_form_block_prefixes(descent_set(p), mu);
}

int sign_exponent(const Permutation& p, const Partition& mu) {
  require_same_size(p, mu);
  return count_outside_markers(descent_set(p), mu);
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  auto first = current_.data_.begin();
  done_ = !std::next_permutation(first, first + current_.n_);
  return *this;
}

PermutationRange::iterator PermutationRange::begin() const {
  iterator it;
  it.current_ = Permutation::identity(n_);
  it.done_ = false;
  return it;
}

PermutationRange enumerate_sn(int n) {
  if (n < 1 || n > kMaxEnumerationN) {
    throw std::out_of_range("enumerate_sn: n must be in 1.." + std::to_string(kMaxEnumerationN));
  }
  return PermutationRange(n);
}

}  // namespace kroots
