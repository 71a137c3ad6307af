#include "grodeg/scalar.hpp"

namespace grodeg {
namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

uint32_t mod_reduce(long v, uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
  if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  // extended Euclid on (a, p)
  int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

}  // namespace

Field Field::prime(uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DomainError("field modulus must be a prime below 2^31, got " +
                      std::to_string(p));
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? "QQ" : "Fp:" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
  if (text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    uint64_t p = 0;
    for (char c : text.substr(3)) {
      if (c < '0' || c > '9' || p > (1ull << 32)) {
        p = 0;
        break;
      }
      p = p * 10 + (c - '0');
    }
    if (p > 0 && p < (1u << 31)) return prime(static_cast<uint32_t>(p));
  }
  throw DomainError("bad field spec '" + std::string(text) +
                    "', expected QQ or Fp:<p>");
}

Scalar Scalar::zero(const Field& f) {
  if (f.is_rationals()) return Scalar(f, mpq_class(0));
  return Scalar(f, uint32_t{0});
}

Scalar Scalar::one(const Field& f) {
  if (f.is_rationals()) return Scalar(f, mpq_class(1));
  return Scalar(f, uint32_t{1});
}

Scalar Scalar::from_int(const Field& f, long v) {
  if (f.is_rationals()) return Scalar(f, mpq_class(static_cast<signed long>(v)));
  return Scalar(f, mod_reduce(v, f.characteristic()));
}

Scalar Scalar::from_rational(mpq_class q) {
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::from_fraction(const Field& f, long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  if (f.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, std::move(q));
  }
  uint32_t p = f.characteristic();
  return Scalar(f, mod_mul(mod_reduce(num, p), mod_inv(mod_reduce(den, p), p), p));
}

bool Scalar::is_zero() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_) == 0;
  return std::get<uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_) == 1;
  return std::get<uint32_t>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("scalar arithmetic across fields: " +
                             field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals())
    return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  uint32_t p = field_.characteristic(), v = std::get<uint32_t>(value_);
  return Scalar(field_, v == 0 ? 0 : p - v);
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals())
    return Scalar(field_,
                  mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
  uint32_t p = field_.characteristic();
  uint64_t s = static_cast<uint64_t>(std::get<uint32_t>(value_)) +
               std::get<uint32_t>(o.value_);
  return Scalar(field_, static_cast<uint32_t>(s >= p ? s - p : s));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals())
    return Scalar(field_,
                  mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
  uint32_t p = field_.characteristic();
  return Scalar(field_, mod_mul(std::get<uint32_t>(value_),
                                std::get<uint32_t>(o.value_), p));
}

Scalar Scalar::inverse() const {
  if (field_.is_rationals()) {
    const mpq_class& q = std::get<mpq_class>(value_);
    if (q == 0) throw DomainError("division by zero in QQ");
    return Scalar(field_, mpq_class(1 / q));
  }
  uint32_t p = field_.characteristic();
  return Scalar(field_, mod_inv(std::get<uint32_t>(value_), p));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.is_rationals())
    return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
  return std::get<uint32_t>(value_) == std::get<uint32_t>(o.value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals())
    throw DomainError("rational() called on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

uint32_t Scalar::prime_value() const {
  if (!field_.is_prime_field())
    throw DomainError("prime_value() called on a rational scalar");
  return std::get<uint32_t>(value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<uint32_t>(value_));
}

}  // namespace grodeg
