#include "phk/rational.hpp"

#include "phk/errors.hpp"

#include <cctype>
#include <ostream>

namespace phk {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  return all_digits(s);
}

} // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw InputError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)),
                     mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(const mpq_class &value) : value_(value) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !all_digits(den))
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+')
    n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0)
    throw InputError("rational literal '" + std::string(text) + "' has zero denominator");
  return Rational(mpq_class(zn, zd));
}

std::string Rational::str() const {
  if (value_.get_den() == 1)
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational &Rational::operator+=(const Rational &o) {
  value_ += o.value_;
  return *this;
}
Rational &Rational::operator-=(const Rational &o) {
  value_ -= o.value_;
  return *this;
}
Rational &Rational::operator*=(const Rational &o) {
  value_ *= o.value_;
  return *this;
}
Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational &a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0)
    return std::strong_ordering::less;
  if (c > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw InputError("dimension mismatch in inner product (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

Vec add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw InputError("dimension mismatch in vector sum");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  return r;
}

Vec sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw InputError("dimension mismatch in vector difference");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] -= b[i];
  return r;
}

Vec scale(const Rational &t, std::span<const Rational> a) {
  Vec r;
  r.reserve(a.size());
  for (const auto &x : a)
    r.push_back(t * x);
  return r;
}

bool is_zero(std::span<const Rational> a) {
  for (const auto &x : a)
    if (!x.is_zero())
      return false;
  return true;
}

Vec primitive(std::span<const Rational> a) {
  if (is_zero(a))
    return Vec(a.begin(), a.end());
  mpz_class l = 1;
  for (const auto &x : a)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  mpz_class g = 0;
  for (const auto &x : a) {
    mpz_class n = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(mpq_class(l, g));
  return scale(factor, a);
}

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

} // namespace phk
