#pragma once

// JSON encodings.
//
//   Dist       [{"atom": "x", "weight": "1/2"}, ...]      atoms in sorted order
//   ConvexSet  {"base": [<Dist>, ...]}                    canonical base order
//   generators {"generators": [<Dist>, ...]}              accepted on input
//
// Weights are reduced-fraction strings "num/den" (so 1 is "1/1"). Output is
// compact, with no insignificant whitespace, and byte-for-byte deterministic.

#include <string>
#include <string_view>

#include "csl/convex_set.hpp"
#include "csl/distribution.hpp"

namespace csl {

std::string dist_to_json(const Dist& d);
std::string convex_set_to_json(const ConvexSet& s);
std::string generator_set_to_json(const GeneratorSet& g);

/// Throws DecodeError on malformed input and NotADistribution on bad weights.
Dist dist_from_json(std::string_view text);

/// Reads either {"generators": [...]} or {"base": [...]} and returns the
/// unique base of the listed distributions.
ConvexSet convex_set_from_json(std::string_view text);

/// The listed distributions, without base extraction.
GeneratorSet generator_set_from_json(std::string_view text);

}  // namespace csl
