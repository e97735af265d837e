#include "csl/atom.hpp"

#include <cctype>
#include <utility>

#include "csl/error.hpp"

namespace csl {

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) throw InvalidAtom("invalid atom name '" + name_ + "'");
}

bool Atom::is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name.substr(1)) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

}  // namespace csl
