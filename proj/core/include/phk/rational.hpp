#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace phk {

/// Exact rational number in canonical form (positive denominator, reduced).
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class &value);

  /// Parses "p", "-p" or "p/q"; throws InputError on anything else or q == 0.
  static Rational parse(std::string_view text);

  /// "p/q" with q > 0, or "p" when q == 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class &raw() const { return value_; }
  [[nodiscard]] Rational abs() const;

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a);

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
  mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

using Vec = std::vector<Rational>;

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vec add(std::span<const Rational> a, std::span<const Rational> b);
Vec sub(std::span<const Rational> a, std::span<const Rational> b);
Vec scale(const Rational &t, std::span<const Rational> a);
bool is_zero(std::span<const Rational> a);
/// Positive rescaling to a primitive integer vector; the zero vector is returned unchanged.
Vec primitive(std::span<const Rational> a);
std::string to_string(std::span<const Rational> v);

} // namespace phk
