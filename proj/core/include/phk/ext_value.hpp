#pragma once

#include "phk/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace phk {

/// Extended real value in R ∪ {-∞, +∞}.
///
/// Addition follows the convention (+∞) + (-∞) = +∞. The supremum of an empty
/// family is -∞ and the infimum of an empty family is +∞; see `Sup` / `Inf`.
class ExtValue {
public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtValue() = default; // finite zero
  ExtValue(const Rational &v) : kind_(Kind::Finite), value_(v) {} // NOLINT

  static ExtValue pos_inf() { return ExtValue(Kind::PosInf); }
  static ExtValue neg_inf() { return ExtValue(Kind::NegInf); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_finite() const { return kind_ == Kind::Finite; }
  [[nodiscard]] bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  [[nodiscard]] bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  /// Throws DomainError when not finite.
  [[nodiscard]] const Rational &value() const;

  /// "+inf", "-inf" or the canonical rational string.
  [[nodiscard]] std::string str() const;
  static ExtValue parse(std::string_view text);

  friend ExtValue operator+(const ExtValue &a, const ExtValue &b);
  friend bool operator==(const ExtValue &a, const ExtValue &b) = default;
  friend std::strong_ordering operator<=>(const ExtValue &a, const ExtValue &b);

private:
  explicit ExtValue(Kind k) : kind_(k) {}
  Kind kind_{Kind::Finite};
  Rational value_{};
};

/// Running supremum, starting at sup ∅ = -∞.
class Sup {
public:
  void add(const ExtValue &v) {
    if (v > best_)
      best_ = v;
  }
  [[nodiscard]] const ExtValue &value() const { return best_; }

private:
  ExtValue best_ = ExtValue::neg_inf();
};

/// Running infimum, starting at inf ∅ = +∞.
class Inf {
public:
  void add(const ExtValue &v) {
    if (v < best_)
      best_ = v;
  }
  [[nodiscard]] const ExtValue &value() const { return best_; }

private:
  ExtValue best_ = ExtValue::pos_inf();
};

} // namespace phk
