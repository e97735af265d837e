#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace csl {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts `n` or `n/d` in decimal, with an optional leading `-` and d > 0.
  static std::optional<Rational> parse(std::string_view text);

  std::string numerator() const;
  std::string denominator() const;

  /// Always `numerator/denominator`, e.g. "1/2", "1/1", "-3/4".
  std::string str() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }

  /// True iff 0 < value < 1.
  bool is_open_probability() const { return sign() > 0 && value_ < 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace csl
