#include "csl/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace csl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : value_(static_cast<long>(numerator), static_cast<long>(denominator)) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::optional<Rational> Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (text.front() == '-') n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

std::string Rational::str() const { return numerator() + "/" + denominator(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace csl
