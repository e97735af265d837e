#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weights that do not form a probability distribution (negative, or not summing to 1).
class NotADistribution : public Error {
 public:
  using Error::Error;
};

/// Convex-combination weights that are negative, do not sum to 1, or do
/// not match the number of points.
class NotAWeightVector : public Error {
 public:
  using Error::Error;
};

/// A mixing probability outside the open interval (0, 1).
class InvalidProbability : public Error {
 public:
  using Error::Error;
};

/// A generator list with no elements.
class EmptyGeneratorSet : public Error {
 public:
  using Error::Error;
};

/// An atom name that is not an identifier.
class InvalidAtom : public Error {
 public:
  using Error::Error;
};

/// A term that was required to be purely probabilistic contains a choice node.
class NotProbabilistic : public Error {
 public:
  using Error::Error;
};

/// Malformed term text. `position()` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed JSON input for a distribution or convex set.
class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace csl
