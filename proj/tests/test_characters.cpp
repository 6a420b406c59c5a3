#include <doctest.h>

#include <complex>
#include <future>
#include <stdexcept>
#include <vector>

#include "kroots/characters.hpp"
#include "kroots/tableau.hpp"

using namespace kroots;

TEST_CASE("canonical permutation") {
  CHECK(canonical_permutation(Partition({1, 1, 1})).is_identity());
  CHECK(canonical_permutation(Partition({2, 1})) == parse_permutation("213"));
  CHECK(canonical_permutation(Partition({3, 2})) == parse_permutation("23154"));
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) CHECK(cycle_type(canonical_permutation(lambda)) == lambda);
  }
}

TEST_CASE("centralizer coordinates") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto pi = canonical_permutation(lambda);
      const auto elements = centralizer_elements(lambda);
      CHECK(elements.size() == centralizer_order(lambda));
      for (const auto& z : elements) {
        const auto data = centralizer_coordinates(z, lambda);
        // Offsets reconstruct the images of the base points.
        int base = 1;
        std::map<int, std::vector<int>> bases;
        for (int part : lambda.parts()) {
          bases[part].push_back(base);
          base += part;
        }
        for (const auto& block : data.blocks) {
          const auto& starts = bases[block.cycle_length];
          for (std::size_t j = 0; j < starts.size(); ++j) {
            const int target_base = starts[static_cast<std::size_t>(block.cycle_images[j])];
            CHECK(z(starts[j]) == power(pi, static_cast<std::uint64_t>(block.offsets[j]))(target_base));
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(centralizer_coordinates(parse_permutation("132"), Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("rho values") {
  for (const auto& lambda : partitions_of(4)) {
    CHECK(rho_value(Permutation::identity(4), lambda).to_integer() == 1);
  }
  CHECK(rho_value(parse_permutation("213"), Partition({2, 1})).to_integer() == -1);
  for (const auto& z : enumerate_sn(3)) CHECK(rho_value(z, Partition({1, 1, 1})).to_integer() == 1);

  // rho is a homomorphism on the centralizer.
  for (const auto& lambda : partitions_of(6)) {
    const auto elements = centralizer_elements(lambda);
    for (std::size_t a = 0; a < elements.size(); a += 3) {
      for (std::size_t b = 0; b < elements.size(); b += 5) {
        const auto lhs = rho_value(compose(elements[a], elements[b]), lambda).value;
        const auto rhs = rho_value(elements[a], lambda).value * rho_value(elements[b], lambda).value;
        CHECK(std::abs(lhs - rhs) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(rho_value(parse_permutation("132"), Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("cyclotomic integrality") {
  CHECK(CyclotomicValue{{3.0000000001, 1e-9}}.to_integer() == 3);
  CHECK(CyclotomicValue{{-2.0, 0.0}}.to_integer() == -2);
  const CyclotomicValue half{{0.5, 0.0}};
  const CyclotomicValue complex_value{{1.0, 0.01}};
  CHECK_THROWS_AS(half.to_integer(), IntegralityError);
  CHECK_THROWS_AS(complex_value.to_integer(), IntegralityError);
}

TEST_CASE("induced characters") {
  const auto trivial = induced_character(Partition::ones(5));
  for (const auto& [mu, v] : trivial.values()) CHECK(v == 1);

  const auto psi21 = induced_character(Partition({2, 1}));
  CHECK(psi21.at(Partition({1, 1, 1})) == 3);
  CHECK(psi21 == irreducible_character(Partition({2, 1})) + irreducible_character(Partition({1, 1, 1})));

  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CHECK(induced_character(lambda).at(Partition::ones(n)) == static_cast<std::int64_t>(class_size(lambda)));
    }
  }
}

TEST_CASE("induced characters agree with the class-sum form of induction") {
  // psi(mu) = (z_mu / z_lambda) * sum of rho over centralizer elements of type mu.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::map<Partition, std::complex<double>> sums;
      for (const auto& z : centralizer_elements(lambda)) sums[cycle_type(z)] += rho_value(z, lambda).value;
      const auto psi = induced_character(lambda);
      for (const auto& mu : partitions_of(n)) {
        const auto scaled = sums[mu] * (static_cast<double>(centralizer_order(mu)) /
                                         static_cast<double>(centralizer_order(lambda)));
        CHECK(CyclotomicValue{scaled}.to_integer() == psi.at(mu));
      }
    }
  }
}

TEST_CASE("Murnaghan-Nakayama oracle") {
  for (const auto& mu : partitions_of(5)) {
    CHECK(mn_character(Partition({5}), mu) == 1);
    std::int64_t sign = 1;
    for (int part : mu.parts()) sign *= (part % 2 == 1) ? 1 : -1;
    CHECK(mn_character(Partition::ones(5), mu) == sign);
  }
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK_THROWS_AS(mn_character(Partition({2, 1}), Partition({2})), std::invalid_argument);

  // Degrees match SYT counts.
  for (int n = 1; n <= 8; ++n) {
    for (const auto& nu : partitions_of(n)) {
      CHECK(mn_character(nu, Partition::ones(n)) == static_cast<std::int64_t>(enumerate_syt(nu).size()));
    }
  }
}

TEST_CASE("unimodal character rule") {
  for (const auto& mu : partitions_of(6)) CHECK(unimodal_character(Partition({6}), mu) == 1);
  for (const auto& nu : partitions_of(6)) {
    CHECK(unimodal_character(nu, Partition::ones(6)) == static_cast<std::int64_t>(enumerate_syt(nu).size()));
  }
  CHECK(unimodal_character(Partition({2, 1}), Partition({3})) == -1);
  CHECK_THROWS_AS(unimodal_character(Partition({2, 1}), Partition({2})), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) CHECK(unimodal_character(nu, mu) == mn_character(nu, mu));
    }
  }
}

TEST_CASE("psi via unimodal permutations") {
  for (const auto& mu : partitions_of(5)) CHECK(psi_via_unimodal(Partition::ones(5), mu) == 1);
  for (const auto& lambda : partitions_of(5)) {
    CHECK(psi_via_unimodal(lambda, Partition::ones(5)) == static_cast<std::int64_t>(class_size(lambda)));
  }
  CHECK(psi_via_unimodal(Partition({2, 1}), Partition({3})) == induced_character(Partition({2, 1})).at(Partition({3})));
  CHECK(psi_via_unimodal(Partition({2, 1}), Partition({3})) == 0);
  CHECK_THROWS_AS(psi_via_unimodal(Partition({2, 1}), Partition({2})), std::invalid_argument);
}

TEST_CASE("inner products and multiplicities") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        const auto ip = inner_product(irreducible_character(a), irreducible_character(b));
        CHECK(ip == Rational(a == b ? 1 : 0));
      }
    }
  }
  CHECK(inner_product(induced_character(Partition({2, 1})), irreducible_character(Partition({3}))) == Rational(0));
  CHECK_THROWS_AS(inner_product(irreducible_character(Partition({2})), irreducible_character(Partition({3}))),
                  std::invalid_argument);

  CHECK(multiplicity(Partition({4}), Partition::ones(4)) == 1);
  CHECK(multiplicity(Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(multiplicity(Partition({1, 1, 1}), Partition({2, 1})) == 1);
  CHECK(multiplicity(Partition({3}), Partition({2, 1})) == 0);

  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::uint64_t dimension = 0;
      for (const auto& nu : partitions_of(n)) {
        const int m = multiplicity(nu, lambda);
        CHECK(m >= 0);
        dimension += static_cast<std::uint64_t>(m) * enumerate_syt(nu).size();
      }
      CHECK(dimension == class_size(lambda));
    }
  }
}

TEST_CASE("class functions") {
  std::map<Partition, std::int64_t> partial{{Partition({3}), 1}};
  CHECK_THROWS_AS(ClassFunction(3, partial), std::invalid_argument);
  const auto chi = irreducible_character(Partition({2, 1}));
  CHECK(chi.to_json("chi", "2,1") ==
        R"({"n":3,"kind":"chi","index":"2,1","values":{"1,1,1":2,"2,1":0,"3":-1}})");
}

TEST_CASE("character caches are safe under concurrent use") {
  std::vector<std::future<ClassFunction>> futures;
  for (int i = 0; i < 8; ++i) {
    futures.push_back(std::async(std::launch::async, [] { return induced_character(Partition({3, 2, 2})); }));
  }
  const auto first = futures.front().get();
  for (std::size_t i = 1; i < futures.size(); ++i) CHECK(futures[i].get() == first);

  std::vector<std::future<std::int64_t>> mn;
  for (int i = 0; i < 8; ++i) {
    mn.push_back(std::async(std::launch::async, [] { return mn_character(Partition({4, 3, 1}), Partition({3, 3, 2})); }));
  }
  const auto v = mn.front().get();
  for (std::size_t i = 1; i < mn.size(); ++i) CHECK(mn[i].get() == v);
}
