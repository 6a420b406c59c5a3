// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is an
// exact integer equality; the only tolerance anywhere is the 1e-6
// integrality assertion inside induced_character, which must never fire.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kroots/kroots.hpp"
#include "oracles.hpp"

using namespace kroots;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void expect(bool condition, const std::string& what) {
    if (!condition && pass) note = what;
    pass = pass && condition;
  }
};

using Criterion = std::function<Outcome()>;

Outcome theorem1() {
  Outcome o;
  int rows = 0;
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= 12; ++k) {
      const auto r = verify_theorem1(n, k);
      rows += static_cast<int>(r.rows.size());
      o.expect(r.all_pass(), "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  o.note = o.pass ? std::to_string(rows) + " (n, k, mu) rows equal" : o.note;
  return o;
}

Outcome worked_permutation_examples() {
  Outcome o;
  const Partition mu{4, 3, 1};
  o.expect(prefix_markers(mu).marks() == std::vector<int>{4, 7, 8}, "S(4,3,1) != (4,7,8)");
  o.expect(is_mu_unimodal(parse_permutation("53687142"), mu), "53687142 not unimodal");
  o.expect(is_mu_unimodal(parse_permutation("35687412"), mu), "35687412 not unimodal");
  o.expect(!is_mu_unimodal(parse_permutation("53867142"), mu), "53867142 unimodal");
  o.expect(!is_mu_unimodal(parse_permutation("53681742"), mu), "53681742 unimodal");
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    for (const auto& p : enumerate_sn(n)) count += is_mu_unimodal(p, Partition::ones(n)) ? 1 : 0;
    o.expect(count == factorial(n), "U_(1^n) != S_n at n=" + std::to_string(n));
  }
  return o;
}

Outcome character_rule() {
  Outcome o;
  int pairs = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        ++pairs;
        o.expect(unimodal_character(nu, mu) == mn_character(nu, mu),
                 "chi^" + nu.to_string() + "_" + mu.to_string() + " differs");
      }
    }
  }
  if (o.pass) o.note = std::to_string(pairs) + " (nu, mu) pairs equal";
  return o;
}

Outcome corollary() {
  Outcome o;
  try {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        const auto psi = induced_character(lambda);
        for (const auto& mu : partitions_of(n)) {
          o.expect(psi_via_unimodal(lambda, mu) == psi.at(mu),
                   "psi^" + lambda.to_string() + "_" + mu.to_string() + " differs");
        }
      }
    }
  } catch (const IntegralityError& e) {
    o.expect(false, std::string("integrality assertion fired: ") + e.what());
  }
  return o;
}

Outcome scharf() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    for (int k : {1, 2, 3, 4, 6, 12}) {
      o.expect(verify_scharf(n, k).all_pass(), "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome descent_distribution() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      o.expect(verify_descent_distribution(lambda).all_pass(), "mismatch at lambda=" + lambda.to_string());
    }
  }
  return o;
}

Outcome worked_tableau_example() {
  Outcome o;
  const StandardTableau t({{1, 3, 6}, {2, 4}, {5}});
  o.expect(tableau_descents(t).positions() == std::vector<int>{1, 3, 4}, "D(T0) != {1,3,4}");
  o.expect(is_mu_unimodal_syt(t, Partition({3, 3})), "T0 not (3,3)-unimodal");
  o.expect(!is_mu_unimodal_syt(t, Partition({4, 2})), "T0 is (4,2)-unimodal");
  return o;
}

Outcome gelfand() {
  Outcome o;
  std::ostringstream counts;
  for (int n = 1; n <= 7; ++n) {
    const auto r = verify_gelfand(n);
    o.expect(r.all_pass(), "gelfand report fails at n=" + std::to_string(n));
    const auto brute = oracle::involution_count(n);
    o.expect(static_cast<std::uint64_t>(theta(2, Permutation::identity(n))) == brute,
             "theta(2, id) != involution count at n=" + std::to_string(n));
    counts << (n > 1 ? "," : "") << brute;
  }
  if (o.pass) o.note = "involutions " + counts.str();
  return o;
}

Outcome rsk_remark() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      o.expect(verify_rsk_remark(n, k).all_pass(), "fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome ribbons() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      const auto j = DescentSet::from_mask(n, mask << 1);
      const auto positions = j.positions();
      const auto brute = oracle::count_with_descent_set(std::set<int>(positions.begin(), positions.end()), n);
      o.expect(count_ribbon_fillings(zigzag_shape(j, n)) == brute, "J={" + j.to_string() + "} n=" + std::to_string(n));
    }
  }
  const std::vector<int> example{1, 4, 5};
  const auto shape = zigzag_shape(DescentSet(8, example), 8);
  o.expect(shape.row_lengths_top_down() == std::vector<int>{1, 3, 1, 3}, "J={1,4,5} shape rows");
  const auto expected = oracle::inclusion_exclusion_beta(example, 8);
  o.expect(static_cast<std::int64_t>(count_ribbon_fillings(shape)) == expected, "J={1,4,5} n=8 filling count");
  if (o.pass) o.note = "J={1,4,5}, n=8: " + std::to_string(expected) + " fillings";
  return o;
}

Outcome structural() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t squares = 0;
    for (const auto& nu : partitions_of(n)) {
      const auto f = enumerate_syt(nu).size();
      squares += f * f;
    }
    o.expect(squares == factorial(n), "sum (f^nu)^2 != n! at n=" + std::to_string(n));
    for (const auto& lambda : partitions_of(n)) {
      o.expect(induced_character(lambda).at(Partition::ones(n)) ==
                   static_cast<std::int64_t>(factorial(n) / centralizer_order(lambda)),
               "psi^" + lambda.to_string() + "(1) != n!/z");
    }
  }
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<StandardTableau, StandardTableau>> images;
    for (const auto& p : enumerate_sn(n)) {
      const auto [P, Q] = rsk(p);
      images.emplace(P, Q);
      o.expect(P.shape() == Q.shape(), "shape(P) != shape(Q) for " + p.to_string());
      if (inverse(p) == p) o.expect(P == Q, "P != Q for involution " + p.to_string());
      o.expect(tableau_descents(P) == descent_set(inverse(p)), "D(P) != D(p^-1) for " + p.to_string());
      o.expect(tableau_descents(Q) == descent_set(p), "D(Q) != D(p) for " + p.to_string());
    }
    o.expect(images.size() == factorial(n), "RSK not injective at n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"AC1  root count equals signed unimodal sum (n<=7, k=0..12)", theorem1},
      {"AC2  prefix markers and unimodal permutation examples", worked_permutation_examples},
      {"AC3  unimodal character rule equals Murnaghan-Nakayama (n<=8)", character_rule},
      {"AC4  psi via unimodal class members equals induced character (n<=7)", corollary},
      {"AC5  theta equals sum of psi over parts dividing k (n<=7)", scharf},
      {"AC6  descent distribution over classes (n<=7)", descent_distribution},
      {"AC7  tableau example descents and unimodality", worked_tableau_example},
      {"AC8  Gelfand model multiplicities and involution counts (n<=7)", gelfand},
      {"AC9  RSK preimage counts for (2^k,1^(n-2k)) (n<=8)", rsk_remark},
      {"AC10 ribbon fillings equal descent-class sizes (n<=7, J={1,4,5} n=8)", ribbons},
      {"AC11 structural invariants", structural},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.note = std::string("exception: ") + e.what();
    }
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), seconds,
                outcome.note.empty() ? "" : " -- ", outcome.note.c_str());
    failures += outcome.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
