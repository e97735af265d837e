#include "csl/error.hpp"

namespace csl {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at offset " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace csl
