#include "kroots/roots.hpp"

#include <map>
#include <stdexcept>

#include "kroots/tableau.hpp"

namespace kroots {

namespace {

std::uint64_t exponent(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  return static_cast<std::uint64_t>(k);
}

}  // namespace

std::int64_t theta(int k, const Permutation& pi) {
  const auto e = exponent(k);
  std::int64_t count = 0;
  for (const auto& sigma : enumerate_sn(pi.size())) {
    if (power(sigma, e) == pi) ++count;
  }
  return count;
}

ClassFunction theta_function(int k, int n) {
  std::map<Partition, std::int64_t> values;
  for (const auto& mu : partitions_of(n)) values.emplace(mu, theta(k, canonical_permutation(mu)));
  return ClassFunction(n, std::move(values));
}

std::vector<Permutation> k_roots_of_identity(int k, int n) {
  const auto e = exponent(k);
  std::vector<Permutation> out;
  for (const auto& sigma : enumerate_sn(n)) {
    if (power(sigma, e).is_identity()) out.push_back(sigma);
  }
  return out;
}

namespace {

std::int64_t signed_sum(const std::vector<Permutation>& roots, const Partition& mu) {
  std::int64_t total = 0;
  for (const auto& sigma : roots) {
    if (!is_mu_unimodal(sigma, mu)) continue;
    total += (sign_exponent(sigma, mu) % 2 == 0) ? 1 : -1;
  }
  return total;
}

}  // namespace

std::int64_t rhs_signed_sum(int k, const Partition& mu) {
  return signed_sum(k_roots_of_identity(k, mu.size()), mu);
}

Report verify_theorem1(int n, int k) {
  Report report{"theorem1", n, k, {}};
  const auto roots = k_roots_of_identity(k, n);
  for (const auto& mu : partitions_of(n)) {
    report.add(mu, "", theta(k, canonical_permutation(mu)), signed_sum(roots, mu));
  }
  report.sort_rows();
  return report;
}

Report verify_scharf(int n, int k) {
  Report report{"scharf", n, k, {}};
  std::vector<ClassFunction> summands;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.all_parts_divide(k)) summands.push_back(induced_character(lambda));
  }
  for (const auto& mu : partitions_of(n)) {
    std::int64_t rhs = 0;
    for (const auto& psi : summands) rhs += psi.at(mu);
    report.add(mu, "", theta(k, canonical_permutation(mu)), rhs);
  }
  report.sort_rows();
  return report;
}

Report verify_descent_distribution(const Partition& lambda) {
  const int n = lambda.size();
  const std::size_t subsets = std::size_t{1} << (n - 1);
  // Index by mask >> 1: descent positions start at 1.
  std::vector<std::int64_t> lhs(subsets, 0);
  std::vector<std::int64_t> rhs(subsets, 0);

  for (const auto& pi : enumerate_sn(n)) {
    if (cycle_type(pi) == lambda) ++lhs[descent_set(pi).mask() >> 1];
  }
  for (const auto& nu : partitions_of(n)) {
    const int m = multiplicity(nu, lambda);
    if (m == 0) continue;
    for (const auto& t : enumerate_syt(nu)) rhs[tableau_descents(t).mask() >> 1] += m;
  }

  Report report{"descents", n, std::nullopt, {}};
  for (std::size_t j = 0; j < subsets; ++j) {
    const auto set = DescentSet::from_mask(n, static_cast<std::uint32_t>(j << 1));
    report.add(lambda, "{" + set.to_string() + "}", lhs[j], rhs[j]);
  }
  return report;
}

Report verify_gelfand(int n) {
  Report report{"gelfand", n, 2, {}};
  std::vector<Partition> involution_types;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda[0] <= 2) involution_types.push_back(lambda);
  }
  for (const auto& nu : partitions_of(n)) {
    std::int64_t total = 0;
    for (const auto& lambda : involution_types) total += multiplicity(nu, lambda);
    report.add(nu, "multiplicity", total, 1);
  }

  std::int64_t self_inverse = 0;
  for (const auto& sigma : enumerate_sn(n)) {
    if (inverse(sigma) == sigma) ++self_inverse;
  }
  report.add(Partition::ones(n), "involutions", theta(2, Permutation::identity(n)), self_inverse);
  report.sort_rows();
  return report;
}

}  // namespace kroots
