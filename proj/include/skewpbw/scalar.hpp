#ifndef SKEWPBW_SCALAR_HPP
#define SKEWPBW_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "skewpbw/errors.hpp"

namespace skewpbw {

/// The base field K: the rationals, or F_p for a prime p.
class Field {
public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// p is checked for primality (deterministic Miller-Rabin); p >= 2.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint64_t modulus() const { return p_; }

  bool operator==(const Field& other) const { return kind_ == other.kind_ && p_ == other.p_; }
  bool operator!=(const Field& other) const { return !(*this == other); }

  std::string to_string() const;

private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Exact element of the base field. Rationals are kept in lowest terms with
/// positive denominator; prime-field values are canonical residues in [0, p).
/// Immutable value type.
class Scalar {
public:
  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar of_int(const Field& field, long value);
  /// Canonicalizes: reduces the fraction, or maps into [0, p) (denominator
  /// inverted mod p; DivisionByZero if it vanishes there).
  static Scalar of_rational(const Field& field, const mpq_class& value);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Sign for display purposes: -1/0/+1 over the rationals, never -1 over F_p.
  int sign() const;

  Scalar add(const Scalar& other) const;
  Scalar sub(const Scalar& other) const;
  Scalar mul(const Scalar& other) const;
  Scalar div(const Scalar& other) const;
  Scalar neg() const;
  /// Multiplicative inverse; DivisionByZero on zero.
  Scalar inv() const;
  /// Exact power; negative exponents invert first (DivisionByZero on zero base).
  Scalar pow(long long exponent) const;
  Scalar pow_u(unsigned long long exponent) const;

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  /// Tagged textual form: "a/b" or "a" over Q, "k mod p" over F_p.
  /// parse(to_string()) round-trips bit-exactly.
  std::string to_string() const;
  /// Bare form without the field tag (used inside polynomial expressions).
  std::string to_plain_string() const;
  static Scalar parse(const std::string& text);

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

private:
  explicit Scalar(const Field& field) : field_(field) {}
  void check_same_field(const Scalar& other) const;

  Field field_ = Field::rationals();
  mpq_class rat_;           // valid when field is the rationals
  std::uint64_t res_ = 0;   // valid when field is F_p
};

inline Scalar operator+(const Scalar& a, const Scalar& b) { return a.add(b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return a.sub(b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return a.mul(b); }
inline Scalar operator/(const Scalar& a, const Scalar& b) { return a.div(b); }
inline Scalar operator-(const Scalar& a) { return a.neg(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace skewpbw

#endif
