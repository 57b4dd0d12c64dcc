#include "lcsoc/scalar.hpp"

namespace lcsoc {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Extended Euclid; requires 0 < a < p with gcd(a, p) = 1.
std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % p;
  if (inv < 0) inv += p;
  return inv;
}

}  // namespace

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field::Field(std::int64_t characteristic) : p_(characteristic) {
  if (p_ == 0) return;
  if (p_ < 2 || !is_prime(p_))
    throw ConfigError("characteristic " + std::to_string(p_) +
                      " is not prime (use 0 for rationals)");
  if (p_ >= (std::int64_t{1} << 31))
    throw ConfigError("characteristic too large (must be < 2^31)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(n)));
  return Scalar::fp(p_, n);
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw UsageError("fraction with zero denominator");
  if (p_ == 0) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar::rational(q);
  }
  return Scalar::fp(p_, num) * Scalar::fp(p_, den).inv();
}

Scalar Scalar::fp(std::int64_t p, std::int64_t value) {
  std::int64_t v = value % p;
  if (v < 0) v += p;
  return Scalar(FpValue{v, p});
}

Scalar Scalar::rational(mpq_class value) {
  value.canonicalize();
  return Scalar(std::move(value));
}

std::int64_t Scalar::characteristic() const {
  if (auto* f = std::get_if<FpValue>(&v_)) return f->p;
  return 0;
}

bool Scalar::is_zero() const {
  if (auto* f = std::get_if<FpValue>(&v_)) return f->v == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* f = std::get_if<FpValue>(&v_)) return f->v == 1 % f->p;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_compatible(const Scalar& rhs) const {
  if (v_.index() != rhs.v_.index())
    throw ConfigError("mixed scalar backends (prime field vs rationals)");
  if (auto* f = std::get_if<FpValue>(&v_)) {
    if (f->p != std::get<FpValue>(rhs.v_).p)
      throw ConfigError("mixed characteristics: " + std::to_string(f->p) + " vs " +
                        std::to_string(std::get<FpValue>(rhs.v_).p));
  }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  check_compatible(rhs);
  if (auto* f = std::get_if<FpValue>(&v_)) {
    std::int64_t v = f->v + std::get<FpValue>(rhs.v_).v;
    if (v >= f->p) v -= f->p;
    return Scalar(FpValue{v, f->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(rhs.v_)));
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  check_compatible(rhs);
  if (auto* f = std::get_if<FpValue>(&v_)) {
    std::int64_t v = f->v - std::get<FpValue>(rhs.v_).v;
    if (v < 0) v += f->p;
    return Scalar(FpValue{v, f->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(rhs.v_)));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  check_compatible(rhs);
  if (auto* f = std::get_if<FpValue>(&v_)) {
    return Scalar(FpValue{f->v * std::get<FpValue>(rhs.v_).v % f->p, f->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(rhs.v_)));
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inv(); }

Scalar Scalar::operator-() const {
  if (auto* f = std::get_if<FpValue>(&v_)) {
    return Scalar(FpValue{f->v == 0 ? 0 : f->p - f->v, f->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw UsageError("division by zero");
  if (auto* f = std::get_if<FpValue>(&v_)) {
    return Scalar(FpValue{invmod(f->v, f->p), f->p});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (v_.index() != rhs.v_.index()) return false;
  if (auto* f = std::get_if<FpValue>(&v_)) {
    const auto& g = std::get<FpValue>(rhs.v_);
    return f->p == g.p && f->v == g.v;
  }
  return std::get<mpq_class>(v_) == std::get<mpq_class>(rhs.v_);
}

std::string Scalar::to_string() const {
  if (auto* f = std::get_if<FpValue>(&v_)) return std::to_string(f->v);
  return std::get<mpq_class>(v_).get_str();
}

std::int64_t Scalar::fp_value() const {
  if (auto* f = std::get_if<FpValue>(&v_)) return f->v;
  throw UsageError("fp_value() on a rational scalar");
}

const mpq_class& Scalar::rational_value() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw UsageError("rational_value() on a prime-field scalar");
}

Scalar reduce_mod(const Scalar& rational, const Field& prime_field) {
  if (!rational.is_rational_backend())
    throw UsageError("reduce_mod expects a rational scalar");
  if (prime_field.is_rational()) throw UsageError("reduce_mod needs a prime field");
  const mpq_class& q = rational.rational_value();
  std::int64_t p = prime_field.characteristic();
  mpz_class num_mod = q.get_num() % p;
  mpz_class den_mod = q.get_den() % p;
  if (den_mod == 0) throw UsageError("denominator divisible by the characteristic");
  Scalar num = Scalar::fp(p, num_mod.get_si());
  Scalar den = Scalar::fp(p, den_mod.get_si());
  return num * den.inv();
}

}  // namespace lcsoc
