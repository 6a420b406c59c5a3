#include "kroots/rsk.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kroots/characters.hpp"

namespace kroots {

RskPair rsk(const Permutation& p) {
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
  for (int i = 1; i <= p.size(); ++i) {
    int x = p(i);
    std::size_t row = 0;
    while (true) {
      if (row == insertion.size()) {
        insertion.push_back({x});
        recording.push_back({i});
        break;
      }
      auto& r = insertion[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        recording[row].push_back(i);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {StandardTableau(std::move(insertion)), StandardTableau(std::move(recording))};
}

Report verify_rsk_remark(int n, int k) {
  if (k < 0 || 2 * k > n) {
    throw std::invalid_argument("verify_rsk_remark requires 0 <= k <= n/2");
  }
  std::vector<int> parts(static_cast<std::size_t>(k), 2);
  parts.resize(static_cast<std::size_t>(n - k), 1);
  const Partition lambda(parts);

  std::map<StandardTableau, std::int64_t> preimages;
  std::int64_t asymmetric = 0;
  for (const auto& pi : enumerate_sn(n)) {
    if (!(cycle_type(pi) == lambda)) continue;
    auto [p, q] = rsk(pi);
    // Every member of this class is an involution, so P = Q.
    if (!(p == q)) ++asymmetric;
    ++preimages[p];
  }

  Report report{"rsk", n, k, {}};
  report.add(lambda, "insertion!=recording", asymmetric, 0);
  for (const auto& nu : partitions_of(n)) {
    const int m = multiplicity(nu, lambda);
    for (const auto& t : enumerate_syt(nu)) {
      auto it = preimages.find(t);
      report.add(nu, t.to_json(), it == preimages.end() ? 0 : it->second, m);
    }
  }
  report.sort_rows();
  return report;
}

}  // namespace kroots
