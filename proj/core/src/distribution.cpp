#include "csl/distribution.hpp"

#include <string>

namespace csl::detail {

void check_weight_vector(std::span<const Rational> weights, std::size_t expected_size) {
  if (weights.empty()) throw NotAWeightVector("empty weight vector");
  if (weights.size() != expected_size) {
    throw NotAWeightVector("expected " + std::to_string(expected_size) + " weights, got " +
                           std::to_string(weights.size()));
  }
  Rational total;
  for (const auto& w : weights) {
    if (w.sign() < 0) throw NotAWeightVector("negative weight " + w.str());
    total += w;
  }
  if (!total.is_one()) throw NotAWeightVector("weights sum to " + total.str() + ", not 1");
}

}  // namespace csl::detail
