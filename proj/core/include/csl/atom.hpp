#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace csl {

/// A named generator of the free algebra. Names match `[A-Za-z_][A-Za-z0-9_]*`
/// and atoms are totally ordered by name.
class Atom {
 public:
  /// Throws InvalidAtom if `name` is not an identifier.
  explicit Atom(std::string name);

  static bool is_identifier(std::string_view name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

inline std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.name(); }

}  // namespace csl
