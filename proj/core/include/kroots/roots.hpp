#pragma once

#include <cstdint>
#include <vector>

#include "kroots/characters.hpp"
#include "kroots/partition.hpp"
#include "kroots/permutation.hpp"
#include "kroots/report.hpp"

namespace kroots {

/// #{sigma in S_n : sigma^k = pi}, by brute force over S_n. k = 0 is allowed.
std::int64_t theta(int k, const Permutation& pi);
/// theta^(k,n) as a class function, evaluated at canonical representatives.
ClassFunction theta_function(int k, int n);

/// I^k_n = {sigma in S_n : sigma^k = 1}, in lexicographic order.
std::vector<Permutation> k_roots_of_identity(int k, int n);

/// Sum over sigma in I^k_n that are mu-unimodal of (-1)^{|D(sigma) \ S(mu)|}.
std::int64_t rhs_signed_sum(int k, const Partition& mu);

/// Root count of the canonical permutation of each cycle type mu against
/// rhs_signed_sum(k, mu).
Report verify_theorem1(int n, int k);

/// theta^(k,n) against the sum of psi^lambda over lambda whose parts all divide k.
Report verify_scharf(int n, int k);

/// For every J in {1..n-1}: #{pi in C_lambda : D(pi) = J} against
/// sum_nu m(nu, lambda) #{T in SYT(nu) : D(T) = J}. Row detail is J.
Report verify_descent_distribution(const Partition& lambda);

/// Every irreducible occurs exactly once in sum_{lambda in {1,2}^*} psi^lambda,
/// plus theta^(2,n)(1) against a direct count of self-inverse permutations.
Report verify_gelfand(int n);

}  // namespace kroots
