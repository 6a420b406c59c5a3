#include "kroots/characters.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "kroots/tableau.hpp"

namespace kroots {

ClassFunction::ClassFunction(int n, std::map<Partition, std::int64_t> values)
    : n_(n), values_(std::move(values)) {
  const auto classes = partitions_of(n);
  if (values_.size() != classes.size()) {
    throw std::invalid_argument("class function must have one value per partition of n");
  }
  for (const auto& mu : classes) {
    if (!values_.contains(mu)) {
      throw std::invalid_argument("class function missing value at " + mu.to_string());
    }
  }
}

std::int64_t ClassFunction::at(const Partition& mu) const {
  auto it = values_.find(mu);
  if (it == values_.end()) {
    throw std::invalid_argument("no class " + mu.to_string() + " in S_" + std::to_string(n_));
  }
  return it->second;
}

std::string ClassFunction::to_json(std::string_view kind, std::string_view index) const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["kind"] = kind;
  j["index"] = index;
  auto& vals = j["values"] = nlohmann::ordered_json::object();
  for (const auto& [mu, v] : values_) vals[mu.to_string()] = v;
  return j.dump();
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("class functions of different degree");
  auto values = a.values();
  for (auto& [mu, v] : values) v += b.at(mu);
  return ClassFunction(a.degree(), std::move(values));
}

bool CyclotomicValue::is_integral() const noexcept {
  return std::abs(value.imag()) < kTolerance &&
         std::abs(value.real() - std::round(value.real())) < kTolerance;
}

std::int64_t CyclotomicValue::to_integer() const {
  if (!is_integral()) {
    throw IntegralityError("character value (" + std::to_string(value.real()) + ", " +
                           std::to_string(value.imag()) + ") is not an integer");
  }
  return static_cast<std::int64_t>(std::llround(value.real()));
}

Permutation canonical_permutation(const Partition& lambda) {
  std::vector<int> word(static_cast<std::size_t>(lambda.size()));
  int base = 1;
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) {
      const int x = base + j;
      word[static_cast<std::size_t>(x - 1)] = (j + 1 < part) ? x + 1 : base;
    }
    base += part;
  }
  return Permutation(word);
}

std::vector<Permutation> centralizer_elements(const Partition& lambda) {
  const auto pi = canonical_permutation(lambda);
  std::vector<Permutation> out;
  for (const auto& x : enumerate_sn(lambda.size())) {
    if (compose(x, pi) == compose(pi, x)) out.push_back(x);
  }
  return out;
}

CentralizerElementData centralizer_coordinates(const Permutation& z, const Partition& lambda) {
  const auto pi = canonical_permutation(lambda);
  if (z.size() != pi.size() || compose(z, pi) != compose(pi, z)) {
    throw std::invalid_argument("element " + z.to_string() + " is not in the centralizer of " +
                                lambda.to_string());
  }

  // Base points of each cycle, grouped by cycle length.
  std::map<int, std::vector<int>, std::greater<>> bases;
  int base = 1;
  for (int part : lambda.parts()) {
    bases[part].push_back(base);
    base += part;
  }

  CentralizerElementData data{z, lambda, {}};
  for (const auto& [len, starts] : bases) {
    WreathBlock block;
    block.cycle_length = len;
    for (int b : starts) {
      const int image = z(b);
      // The cycle containing `image` is the one whose base is the largest
      // base <= image; cycles occupy consecutive integers.
      auto it = std::upper_bound(starts.begin(), starts.end(), image);
      const int target = static_cast<int>(std::distance(starts.begin(), it)) - 1;
      const int offset = target < 0 ? len : image - starts[static_cast<std::size_t>(target)];
      if (offset >= len) {
        throw std::logic_error("centralizer element maps a cycle onto one of another length");
      }
      block.cycle_images.push_back(target);
      block.offsets.push_back(offset);
    }
    data.blocks.push_back(std::move(block));
  }
  return data;
}

CyclotomicValue rho_value(const CentralizerElementData& z, const Partition& lambda) {
  if (!(z.lambda == lambda)) throw std::invalid_argument("centralizer data built for another partition");
  double angle = 0.0;
  for (const auto& block : z.blocks) {
    int total = 0;
    for (int a : block.offsets) total += a;
    // omega_1 = 1, so fixed points never contribute.
    angle += 2.0 * std::numbers::pi * static_cast<double>(total % block.cycle_length) /
             static_cast<double>(block.cycle_length);
  }
  return {std::polar(1.0, angle)};
}

CyclotomicValue rho_value(const Permutation& z, const Partition& lambda) {
  return rho_value(centralizer_coordinates(z, lambda), lambda);
}

namespace {

ClassFunction compute_induced(const Partition& lambda) {
  const int n = lambda.size();
  std::unordered_map<std::uint64_t, std::complex<double>> rho;
  for (const auto& z : centralizer_elements(lambda)) {
    rho.emplace(z.key(), rho_value(z, lambda).value);
  }
  const auto z_order = static_cast<double>(centralizer_order(lambda));

  std::map<Partition, std::int64_t> values;
  for (const auto& mu : partitions_of(n)) {
    const auto g = canonical_permutation(mu);
    std::complex<double> sum{0.0, 0.0};
    for (const auto& x : enumerate_sn(n)) {
      auto it = rho.find(conjugate(g, x).key());
      if (it != rho.end()) sum += it->second;
    }
    values.emplace(mu, CyclotomicValue{sum / z_order}.to_integer());
  }
  return ClassFunction(n, std::move(values));
}

}  // namespace

ClassFunction induced_character(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, ClassFunction> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  auto result = compute_induced(lambda);
  std::lock_guard lock(mutex);
  return cache.emplace(lambda, std::move(result)).first->second;
}

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::int64_t mn_recurse(const std::vector<int>& shape, const std::vector<int>& parts, std::size_t next,
                        std::map<MnKey, std::int64_t>& memo) {
  if (next == parts.size()) return shape.empty() ? 1 : 0;
  MnKey key{shape, std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(next), parts.end())};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Beta-set: beta_j = shape_j + (L - 1 - j). Removing a border strip of
  // length r moves one bead from b to b - r onto an empty slot; the sign is
  // (-1)^(beads strictly between).
  const auto len = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int j = 0; j < len; ++j) beta[static_cast<std::size_t>(j)] = shape[static_cast<std::size_t>(j)] + len - 1 - j;

  const int r = parts[next];
  std::int64_t total = 0;
  for (int j = 0; j < len; ++j) {
    const int b = beta[static_cast<std::size_t>(j)];
    const int moved = b - r;
    if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
    int between = 0;
    for (int c : beta) between += (c > moved && c < b) ? 1 : 0;

    std::vector<int> new_beta = beta;
    new_beta[static_cast<std::size_t>(j)] = moved;
    std::sort(new_beta.begin(), new_beta.end(), std::greater<>{});
    std::vector<int> new_shape;
    for (int i = 0; i < len; ++i) {
      const int part = new_beta[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) new_shape.push_back(part);
    }
    const std::int64_t sign = (between % 2 == 0) ? 1 : -1;
    total += sign * mn_recurse(new_shape, parts, next + 1, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("mn_character: sizes differ");
  static std::mutex mutex;
  static std::map<MnKey, std::int64_t> memo;
  std::lock_guard lock(mutex);
  return mn_recurse(nu.parts(), mu.parts(), 0, memo);
}

ClassFunction irreducible_character(const Partition& nu) {
  std::map<Partition, std::int64_t> values;
  for (const auto& mu : partitions_of(nu.size())) values.emplace(mu, mn_character(nu, mu));
  return ClassFunction(nu.size(), std::move(values));
}

std::int64_t unimodal_character(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("unimodal_character: sizes differ");
  std::int64_t total = 0;
  for (const auto& t : enumerate_syt(nu)) {
    if (!is_mu_unimodal_syt(t, mu)) continue;
    total += (count_outside_markers(tableau_descents(t), mu) % 2 == 0) ? 1 : -1;
  }
  return total;
}

std::int64_t psi_via_unimodal(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("psi_via_unimodal: sizes differ");
  std::int64_t total = 0;
  for (const auto& sigma : enumerate_sn(lambda.size())) {
    if (!is_mu_unimodal(sigma, mu) || !(cycle_type(sigma) == lambda)) continue;
    total += (sign_exponent(sigma, mu) % 2 == 0) ? 1 : -1;
  }
  return total;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("inner_product: degrees differ");
  Rational sum{0};
  for (const auto& [mu, fv] : f.values()) {
    sum += Rational(fv * g.at(mu), static_cast<std::int64_t>(centralizer_order(mu)));
  }
  return sum;
}

int multiplicity(const Partition& nu, const Partition& lambda) {
  if (nu.size() != lambda.size()) throw std::invalid_argument("multiplicity: sizes differ");
  const auto m = inner_product(induced_character(lambda), irreducible_character(nu));
  if (m.denominator() != 1 || m.numerator() < 0) {
    throw std::logic_error("multiplicity of " + nu.to_string() + " in psi^" + lambda.to_string() +
                           " is not a nonnegative integer");
  }
  return static_cast<int>(m.numerator());
}

}  // namespace kroots
