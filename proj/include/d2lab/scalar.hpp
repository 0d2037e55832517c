#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace d2lab {

/// Ground field: the rationals or a prime field GF(p) with p < 2^31.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rational() noexcept { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  Kind kind() const noexcept { return p_ == 0 ? Kind::rational : Kind::prime; }
  std::uint32_t characteristic() const noexcept { return p_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_ = 0;
};

/// Exact field element.
///
/// A scalar is either a rational number (modulus 0) or a least residue
/// modulo a prime.  Rational scalars act as "universal" constants: when one
/// meets a residue it is reduced into that prime field, so identity
/// matrices and small literals can be written without naming the field.
/// Data that must live in GF(p) (structure constants, parsed input) has to
/// be created with `Scalar::in`, otherwise e.g. 2 stays nonzero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& v, std::uint32_t modulus);

  static Scalar in(Field f, long v) { return Scalar(mpq_class(v), f.characteristic()); }
  static Scalar in(Field f, const mpq_class& v) { return Scalar(v, f.characteristic()); }
  /// Parses "7", "-3/4".  Throws std::invalid_argument on malformed text
  /// or a zero denominator (or one divisible by p).
  static Scalar parse(std::string_view text, Field f);

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const;
  std::uint32_t modulus() const noexcept { return p_; }
  const mpq_class& value() const noexcept { return v_; }
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void reduce();
  std::uint32_t unify(const Scalar& o);

  mpq_class v_;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace d2lab
