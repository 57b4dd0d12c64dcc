#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "lcsoc/error.hpp"

namespace lcsoc {

// Exact scalar arithmetic.  Two backends share one value type:
//   - prime field Z/p (p prime, p < 2^31 so products fit in int64),
//   - arbitrary-precision rationals (characteristic 0), backed by GMP.
// Every value is kept canonical: in [0, p) for the prime field, reduced
// fraction with positive denominator for rationals (GMP maintains this).
// Operations on operands from different backends or different moduli
// throw ConfigError.

class Scalar;

// Field descriptor: characteristic 0 selects rationals, otherwise p must be
// prime and < 2^31.
class Field {
 public:
  explicit Field(std::int64_t characteristic);

  std::int64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  // num/den; den must be nonzero and, for the prime field, invertible mod p.
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  bool operator==(const Field& other) const { return p_ == other.p_; }

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

class Scalar {
 public:
  Scalar() = delete;  // always build values through a Field

  static Scalar fp(std::int64_t p, std::int64_t value);
  static Scalar rational(mpq_class value);

  bool is_rational_backend() const { return std::holds_alternative<mpq_class>(v_); }
  // 0 for the rational backend.
  std::int64_t characteristic() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // rhs must be nonzero
  Scalar operator-() const;
  Scalar inv() const;  // multiplicative inverse; throws UsageError on zero

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  // Canonical representative: integer in [0,p) or "num/den" (den omitted
  // when 1).
  std::string to_string() const;

  // Prime-field value in [0, p); UsageError on the rational backend.
  std::int64_t fp_value() const;
  // Rational value; UsageError on the prime-field backend.
  const mpq_class& rational_value() const;

 private:
  struct FpValue {
    std::int64_t v;
    std::int64_t p;
  };

  explicit Scalar(FpValue f) : v_(f) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  void check_compatible(const Scalar& rhs) const;

  std::variant<FpValue, mpq_class> v_;
};

// Reduces a rational scalar mod p.  Throws UsageError when the denominator
// is divisible by p.  Used by the cross-backend consistency checks.
Scalar reduce_mod(const Scalar& rational, const Field& prime_field);

}  // namespace lcsoc
