#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo a prime.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include "apolar/errors.hpp"

namespace apolar {

class Rational;
class ModP;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

struct RationalField {
  using scalar_type = Rational;

  Rational from_int(std::int64_t v) const;
  Rational from_integer(const mpz_class& v) const;
  Rational from_fraction(const mpz_class& num, const mpz_class& den) const;

  std::uint64_t characteristic() const noexcept { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

struct PrimeField {
  using scalar_type = ModP;

  PrimeField() = default;
  // Throws InvalidArgument unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus = kDefaultPrime;

  ModP from_int(std::int64_t v) const;
  ModP from_integer(const mpz_class& v) const;
  ModP from_fraction(const mpz_class& num, const mpz_class& den) const;

  std::uint64_t characteristic() const noexcept { return modulus; }
  std::string name() const { return "GF(" + std::to_string(modulus) + ")"; }
  bool operator==(const PrimeField&) const = default;
};

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  RationalField field() const noexcept { return {}; }

  Rational inv() const;
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this *= o.inv(); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  // "num/den", or "num" when the denominator is 1.
  std::string to_string() const;

 private:
  mpq_class v_;
};

class ModP {
 public:
  // Unbound zero; only usable as a placeholder before assignment.
  ModP() = default;
  ModP(std::uint64_t residue, std::uint64_t modulus)
      : value_(modulus ? residue % modulus : 0), modulus_(modulus) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  PrimeField field() const;

  ModP inv() const;
  ModP operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }

  ModP& operator+=(const ModP& o) {
    check(o);
    value_ += o.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    value_ = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(value_) * o.value_ % modulus_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inv(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) {
    a.check(b);
    return a.value_ == b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  void check(const ModP& o) const {
    if (modulus_ != o.modulus_ || modulus_ == 0) {
      throw MixedFields("GF(" + std::to_string(modulus_) + ") vs GF(" +
                        std::to_string(o.modulus_) + ")");
    }
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

template <class S>
struct field_of;
template <>
struct field_of<Rational> {
  using type = RationalField;
};
template <>
struct field_of<ModP> {
  using type = PrimeField;
};
template <class S>
using FieldOf = typename field_of<S>::type;

template <class S>
concept FieldScalar = requires(const S& a, const S& b) {
  typename field_of<S>::type;
  { a + b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a.inv() } -> std::same_as<S>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.field() } -> std::same_as<FieldOf<S>>;
  { a.to_string() } -> std::same_as<std::string>;
};

inline Rational RationalField::from_int(std::int64_t v) const { return Rational(mpq_class(mpz_class(static_cast<long>(v)))); }
inline Rational RationalField::from_integer(const mpz_class& v) const { return Rational(mpq_class(v)); }
inline Rational RationalField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  return Rational(num, den);
}

inline PrimeField ModP::field() const {
  PrimeField f;
  f.modulus = modulus_;
  return f;
}

// Field-generic constructors of 0 and 1.
inline Rational zero_of(const RationalField&) { return Rational(); }
inline Rational one_of(const RationalField&) { return Rational(1); }
inline ModP zero_of(const PrimeField& f) { return ModP(0, f.modulus); }
inline ModP one_of(const PrimeField& f) { return ModP(1, f.modulus); }

// Uniform element: residues over GF(p), integers in [-10^6, 10^6] over Q.
template <class Rng>
ModP random_scalar(const PrimeField& f, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus - 1);
  return ModP(dist(rng), f.modulus);
}
template <class Rng>
Rational random_scalar(const RationalField& f, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  return f.from_int(dist(rng));
}
template <class Field, class Rng>
auto random_nonzero_scalar(const Field& f, Rng& rng) {
  auto v = random_scalar(f, rng);
  while (v.is_zero()) v = random_scalar(f, rng);
  return v;
}

// Parses "num" or "num/den" (optional leading sign) into the field.
// Throws InvalidArgument on malformed text, DivisionByZero on a zero
// denominator.
template <class Field>
auto parse_scalar(std::string_view text, const Field& field) -> typename Field::scalar_type {
  auto parse_int = [&](std::string_view t) {
    std::string_view digits = t;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InvalidArgument("bad scalar '" + std::string(text) + "'");
    }
    if (t.front() == '+') t.remove_prefix(1);
    return mpz_class(std::string(t));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return field.from_integer(parse_int(text));
  return field.from_fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& v) { return os << v.to_string(); }

}  // namespace apolar
