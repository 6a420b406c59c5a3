#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "kroots/partition.hpp"
#include "kroots/permutation.hpp"

namespace kroots {

using Rational = boost::rational<std::int64_t>;

/// An integer-valued function on the conjugacy classes of S_n, stored as one
/// value per cycle type.
class ClassFunction {
 public:
  ClassFunction() = default;
  /// Throws std::invalid_argument unless `values` has exactly one entry for
  /// every partition of n.
  ClassFunction(int n, std::map<Partition, std::int64_t> values);

  int degree() const noexcept { return n_; }
  std::int64_t at(const Partition& mu) const;
  std::int64_t operator()(const Partition& mu) const { return at(mu); }
  const std::map<Partition, std::int64_t>& values() const noexcept { return values_; }

  /// {"n": ..., "kind": ..., "index": ..., "values": {"4,3,1": ...}}
  std::string to_json(std::string_view kind, std::string_view index) const;

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_ = 0;
  std::map<Partition, std::int64_t> values_;
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);

/// Raised when a character value that must be an integer is not one. This
/// points at a convention bug; values are never silently rounded.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex character value with an integrality check at tolerance 1e-6.
struct CyclotomicValue {
  static constexpr double kTolerance = 1e-6;

  std::complex<double> value;

  bool is_integral() const noexcept;
  /// Nearest integer; throws IntegralityError if is_integral() is false.
  std::int64_t to_integer() const;
};

/// Cycles of lambda laid out on consecutive integers in part order, each
/// cycle b -> b+1 -> ... -> b+i-1 -> b with base point b.
/// canonical_permutation({3,2}) = (1 2 3)(4 5).
Permutation canonical_permutation(const Partition& lambda);

/// Coordinates of a centralizer element in prod_i C_i wr S_{k_i}.
struct WreathBlock {
  int cycle_length = 0;
  /// cycle_images[j] = index (among cycles of this length) of the cycle that
  /// cycle j is carried onto.
  std::vector<int> cycle_images;
  /// element(base_j) = pi^{offsets[j]}(base of cycle_images[j]).
  std::vector<int> offsets;
};

struct CentralizerElementData {
  Permutation element;
  Partition lambda;
  std::vector<WreathBlock> blocks;  // one per distinct part size, decreasing
};

/// Elements of S_n commuting with canonical_permutation(lambda), by brute force.
std::vector<Permutation> centralizer_elements(const Partition& lambda);

/// Throws std::invalid_argument if z does not commute with
/// canonical_permutation(lambda).
CentralizerElementData centralizer_coordinates(const Permutation& z, const Partition& lambda);

/// rho^lambda(z) = prod_i omega_i^{sum of offsets on i-cycles}, omega_i = exp(2 pi i / i).
CyclotomicValue rho_value(const CentralizerElementData& z, const Partition& lambda);
CyclotomicValue rho_value(const Permutation& z, const Partition& lambda);

/// psi^lambda: rho^lambda induced from the centralizer Z_lambda to S_n,
///   psi(g) = (1/z_lambda) * sum_{x in S_n, x^{-1} g x in Z_lambda} rho(x^{-1} g x).
/// Results are cached per lambda; safe to call concurrently.
ClassFunction induced_character(const Partition& lambda);

/// Irreducible character value chi^nu_mu by the Murnaghan-Nakayama recursion.
std::int64_t mn_character(const Partition& nu, const Partition& mu);
/// The full irreducible character chi^nu via mn_character.
ClassFunction irreducible_character(const Partition& nu);

/// chi^nu_mu as the signed count of mu-unimodal standard tableaux of shape nu.
std::int64_t unimodal_character(const Partition& nu, const Partition& mu);

/// Signed count of the mu-unimodal permutations of cycle type lambda.
std::int64_t psi_via_unimodal(const Partition& lambda, const Partition& mu);

/// (1/n!) sum_mu |C_mu| f(mu) g(mu)
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// m(nu, lambda) = <psi^lambda, chi^nu>. Throws std::logic_error if the
/// inner product is negative or not an integer.
int multiplicity(const Partition& nu, const Partition& lambda);

}  // namespace kroots
