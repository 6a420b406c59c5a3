#include "kroots/tableau.hpp"

#include <stdexcept>

#include "text.hpp"

namespace kroots {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& r : rows_) {
    if (r.empty()) throw std::invalid_argument("tableau rows must be non-empty");
    lengths.push_back(static_cast<int>(r.size()));
  }
  shape_ = Partition(lengths);  // throws unless row lengths are weakly decreasing
  const int n = shape_.size();
  row_of_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || row_of_[static_cast<std::size_t>(v)] != -1) {
        throw std::invalid_argument("tableau entries must be exactly 1.." + std::to_string(n));
      }
      row_of_[static_cast<std::size_t>(v)] = static_cast<int>(r);
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw std::invalid_argument("tableau rows must increase");
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw std::invalid_argument("tableau columns must increase upward");
      }
    }
  }
}

int StandardTableau::row_of(int entry) const {
  if (entry < 1 || entry > size()) throw std::out_of_range("tableau entry out of range");
  return row_of_[static_cast<std::size_t>(entry)];
}

std::string StandardTableau::to_json() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += ',';
    out += '[' + detail::join(rows_[r]) + ']';
  }
  return out + ']';
}

namespace {

void fill(const std::vector<int>& shape, int next, int n, std::vector<std::vector<int>>& rows,
          std::vector<StandardTableau>& out) {
  if (next > n) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const auto len = static_cast<int>(rows[r].size());
    if (len >= shape[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
    rows[r].push_back(next);
    fill(shape, next + 1, n, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  fill(shape.parts(), 1, shape.size(), rows, out);
  return out;
}

DescentSet tableau_descents(const StandardTableau& t) {
  DescentSet d(t.size());
  for (int i = 1; i < t.size(); ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) d.insert(i);
  }
  return d;
}

bool is_mu_unimodal_syt(const StandardTableau& t, const Partition& mu) {
  if (t.size() != mu.size()) throw std::invalid_argument("tableau and partition sizes differ");
  return descents_form_block_prefixes(tableau_descents(t), mu);
}

}  // namespace kroots
