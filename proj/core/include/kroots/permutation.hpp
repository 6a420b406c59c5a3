#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kroots/descent_set.hpp"
#include "kroots/partition.hpp"

namespace kroots {

/// Largest degree a Permutation can hold.
inline constexpr int kMaxDegree = 16;
/// Largest n for which full enumeration of S_n is allowed.
inline constexpr int kMaxEnumerationN = 10;

/// A permutation of {1, ..., n} in one-line notation: p(i) is the image of i.
///
/// Storage is a fixed inline array, so values are cheap to copy and never
/// allocate. All positions and values on the public surface are 1-indexed.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::span<const int> word);
  Permutation(std::initializer_list<int> word);

  static Permutation identity(int n);

  int size() const noexcept { return n_; }
  /// Image of i, 1 <= i <= n.
  int operator()(int i) const noexcept { return data_[static_cast<std::size_t>(i - 1)] + 1; }
  std::vector<int> word() const;

  bool is_identity() const noexcept;

  /// Packs the word into 4 bits per entry; distinct permutations of the
  /// same size get distinct keys.
  std::uint64_t key() const noexcept;

  /// "5,3,6,8,7,1,4,2"
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  friend class PermutationRange;
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation power(const Permutation&, std::uint64_t);

  std::array<std::uint8_t, kMaxDegree> data_{};  // 0-indexed images
  std::uint8_t n_ = 0;
};

/// Accepts "5,3,6,8,7,1,4,2", or the digits-only form "53687142" when n <= 9.
Permutation parse_permutation(std::string_view text);

/// (p o q)(i) = p(q(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// k-fold composition; power(p, 0) is the identity.
Permutation power(const Permutation& p, std::uint64_t k);
/// x^{-1} g x
Permutation conjugate(const Permutation& g, const Permutation& x);

Partition cycle_type(const Permutation& p);
/// Cycles in order of their smallest element, each starting at that element.
std::vector<std::vector<int>> cycles(const Permutation& p);
/// lcm of the cycle lengths.
std::uint64_t order(const Permutation& p);

DescentSet descent_set(const Permutation& p);

/// Within each block of positions mu_(i)+1 .. mu_(i+1) the values first
/// strictly decrease, then strictly increase (either run may be empty).
/// Throws std::invalid_argument if |mu| != n.
bool is_mu_unimodal(const Permutation& p, const Partition& mu);

/// |D(p) \ S(mu)|. Throws std::invalid_argument if |mu| != n.
int sign_exponent(const Permutation& p, const Partition& mu);

/// Lazily walks S_n in lexicographic order of the one-line word.
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class PermutationRange;
    Permutation current_;
    bool done_ = true;
  };

  explicit PermutationRange(int n) : n_(n) {}
  iterator begin() const;
  iterator end() const { return {}; }
  int degree() const noexcept { return n_; }

 private:
  int n_;
};

/// All n! permutations of S_n. Throws std::out_of_range unless
/// 1 <= n <= kMaxEnumerationN.
PermutationRange enumerate_sn(int n);

}  // namespace kroots
