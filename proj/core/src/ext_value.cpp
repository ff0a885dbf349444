#include "phk/ext_value.hpp"

#include "phk/errors.hpp"

namespace phk {

const Rational &ExtValue::value() const {
  if (kind_ != Kind::Finite)
    throw DomainError("extended value " + str() + " is not finite");
  return value_;
}

std::string ExtValue::str() const {
  switch (kind_) {
  case Kind::NegInf:
    return "-inf";
  case Kind::PosInf:
    return "+inf";
  case Kind::Finite:
    break;
  }
  return value_.str();
}

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "+inf" || text == "inf")
    return pos_inf();
  if (text == "-inf")
    return neg_inf();
  return ExtValue(Rational::parse(text));
}

ExtValue operator+(const ExtValue &a, const ExtValue &b) {
  if (a.is_pos_inf() || b.is_pos_inf())
    return ExtValue::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf())
    return ExtValue::neg_inf();
  return ExtValue(a.value_ + b.value_);
}

std::strong_ordering operator<=>(const ExtValue &a, const ExtValue &b) {
  auto rank = [](ExtValue::Kind k) {
    switch (k) {
    case ExtValue::Kind::NegInf:
      return 0;
    case ExtValue::Kind::Finite:
      return 1;
    case ExtValue::Kind::PosInf:
      return 2;
    }
    return 1;
  };
  if (a.kind_ != b.kind_)
    return rank(a.kind_) <=> rank(b.kind_);
  if (a.is_finite())
    return a.value_ <=> b.value_;
  return std::strong_ordering::equal;
}

} // namespace phk
