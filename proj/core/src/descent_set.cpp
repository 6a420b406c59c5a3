#include "kroots/descent_set.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "text.hpp"

namespace kroots {

DescentSet::DescentSet(int n) : n_(n) {
  if (n < 0 || n > kMaxSize) throw std::invalid_argument("descent set ambient size out of range");
}

DescentSet::DescentSet(int n, const std::vector<int>& positions) : DescentSet(n) {
  for (int p : positions) insert(p);
}

DescentSet DescentSet::from_mask(int n, std::uint32_t mask) {
  DescentSet d(n);
  for (int i = 0; i < kMaxSize; ++i) {
    if ((mask >> i) & 1u) d.insert(i);
  }
  return d;
}

bool DescentSet::contains(int position) const noexcept {
  return position >= 1 && position < n_ && ((mask_ >> position) & 1u);
}

void DescentSet::insert(int position) {
  if (position < 1 || position >= n_) {
    throw std::invalid_argument("descent position " + std::to_string(position) +
                                " outside {1.." + std::to_string(n_ - 1) + "}");
  }
  mask_ |= 1u << position;
}

int DescentSet::size() const noexcept { return std::popcount(mask_); }

std::vector<int> DescentSet::positions() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string DescentSet::to_string() const { return detail::join(positions()); }

DescentSet parse_descent_set(std::string_view text, int n) {
  text = detail::trim(text);
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    text = text.substr(1, text.size() - 2);
  }
  return DescentSet(n, detail::parse_int_list(text, "descent set"));
}

}  // namespace kroots
