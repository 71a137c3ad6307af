#ifndef GRODEG_SCALAR_HPP
#define GRODEG_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "grodeg/error.hpp"

namespace grodeg {

// Coefficient field: the rationals, or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  uint32_t characteristic() const { return p_; }

  bool operator==(const Field&) const = default;

  // "QQ" or "Fp:<p>", the spelling used by files and command lines.
  std::string to_string() const;
  static Field parse(std::string_view text);

 private:
  explicit Field(uint32_t p) : p_(p) {}
  uint32_t p_;
};

// Exact field element.  Rationals are kept in lowest terms with positive
// denominator; prime-field values are canonical representatives in [0, p).
// Arithmetic between elements of different fields throws FieldMismatchError.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar from_rational(mpq_class q);                    // QQ only
  static Scalar from_fraction(const Field& f, long num, long den);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // DomainError on zero divisor
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // QQ accessors; DomainError when the field does not match.
  const mpq_class& rational() const;
  uint32_t prime_value() const;

  // "3", "-1/2" over QQ; the canonical representative over Fp.
  std::string to_string() const;

 private:
  Scalar(Field f, std::variant<mpq_class, uint32_t> v)
      : field_(f), value_(std::move(v)) {}
  void require_same_field(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, uint32_t> value_;
};

}  // namespace grodeg

#endif
